#include "reebforge/grid_oracle.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reebforge {

namespace {

using Label = std::vector<int>;

// Sheet labels of an interval: 0 where the glue applies, otherwise both signs.
std::vector<Label> labels_for(const std::vector<bool>& contact) {
  std::vector<Label> out{{}};
  for (bool glued : contact) {
    std::vector<Label> next;
    for (const Label& base : out)
      for (int s : {-1, 0, +1}) {
        if (glued != (s == 0)) continue;
        Label l = base;
        l.push_back(s);
        next.push_back(std::move(l));
      }
    out = std::move(next);
  }
  return out;
}

// Two sheet labels connect when no coordinate pins them to opposite signs.
bool compatible(const Label& u, const Label& v) {
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0 && v[i] != 0 && u[i] != v[i]) return false;
  return true;
}

}  // namespace

Multigraph grid_oracle_reeb(const Arrangement& a, int resolution) {
  int n = resolution;
  if (n < 4) throw std::invalid_argument("grid oracle needs resolution >= 4");

  std::vector<int> zg;
  {
    std::set<int> owning;
    for (const Curve& c : a.curves) owning.insert(c.group);
    for (int g : owning)
      if (a.exponent_of_group(g) == 0) zg.push_back(g);
  }

  Rat w = a.X2 - a.X1, h = a.Y2 - a.Y1;
  std::vector<Rat> ys(n);
  for (int j = 0; j < n; ++j) ys[j] = a.Y1 + h * Rat(2 * j + 1) / Rat(2 * n);

  // The glue of an exponent-zero group applies where the run's boundary is one
  // of the group's circles. The raster can't land on the arc itself, so test
  // whether a group disk enters the gap between the outermost sampled cell and
  // the next sample (or the rectangle wall). The gap shrinks with resolution,
  // so this converges to true arc contact and never misses a lens thinner than
  // a cell hugging the wall.
  auto disk_in_gap = [&](const Rat& x, const Rat& lo, const Rat& hi, int g) {
    for (const Curve& c : a.curves) {
      if (c.group != g || !c.is_circle()) continue;
      Rat d = c.r2 - (x - c.cx) * (x - c.cx);
      if (d <= 0) continue;
      if (compare(QuadExt(c.cy, Rat(-1), d), QuadExt(hi)) < 0 &&
          compare(QuadExt(c.cy, Rat(1), d), QuadExt(lo)) > 0)
        return true;
    }
    return false;
  };

  struct Ival {
    int j0, j1;
    std::vector<bool> contact;
  };
  struct SNode {
    int fwd_count = 0, back_count = 0;
    std::vector<int> fwd;
    std::string name;
  };
  std::vector<SNode> nodes;
  std::vector<std::vector<Ival>> cols(n);
  std::vector<std::map<std::pair<int, Label>, int>> node_of(n);

  for (int i = 0; i < n; ++i) {
    Rat x = a.X1 + w * Rat(2 * i + 1) / Rat(2 * n);
    std::vector<char> in(n);
    for (int j = 0; j < n; ++j) in[j] = in_open_region(a, x, ys[j]) ? 1 : 0;
    for (int j = 0; j < n;) {
      if (!in[j]) {
        ++j;
        continue;
      }
      int j0 = j;
      while (j < n && in[j]) ++j;
      Ival iv{j0, j - 1, {}};
      Rat below = j0 > 0 ? ys[j0 - 1] : a.Y1;
      Rat above = iv.j1 + 1 < n ? ys[iv.j1 + 1] : a.Y2;
      for (int g : zg)
        iv.contact.push_back(disk_in_gap(x, below, ys[j0], g) ||
                             disk_in_gap(x, ys[iv.j1], above, g));
      int k = static_cast<int>(cols[i].size());
      for (const Label& lab : labels_for(iv.contact)) {
        SNode s;
        s.name = "g" + std::to_string(i) + "_" + std::to_string(k);
        for (int c : lab)
          if (c != 0) s.name += c > 0 ? "+" : "-";
        node_of[i][{k, lab}] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(s));
      }
      cols[i].push_back(std::move(iv));
    }
  }

  for (int i = 0; i + 1 < n; ++i)
    for (int p = 0; p < static_cast<int>(cols[i].size()); ++p)
      for (int q = 0; q < static_cast<int>(cols[i + 1].size()); ++q) {
        if (cols[i][p].j1 < cols[i + 1][q].j0 || cols[i + 1][q].j1 < cols[i][p].j0) continue;
        for (const Label& lp : labels_for(cols[i][p].contact))
          for (const Label& lq : labels_for(cols[i + 1][q].contact)) {
            if (!compatible(lp, lq)) continue;
            int u = node_of[i].at({p, lp}), v = node_of[i + 1].at({q, lq});
            nodes[u].fwd.push_back(v);
            ++nodes[u].fwd_count;
            ++nodes[v].back_count;
          }
      }

  auto is_event = [&](int u) { return nodes[u].back_count != 1 || nodes[u].fwd_count != 1; };

  // Event nodes become vertices; every run of pass-through nodes between two
  // events contracts to a single edge, walked rightward once.
  Multigraph out;
  for (int u = 0; u < static_cast<int>(nodes.size()); ++u)
    if (is_event(u)) out.ensure_vertex(nodes[u].name);
  for (int u = 0; u < static_cast<int>(nodes.size()); ++u) {
    if (!is_event(u)) continue;
    for (int f : nodes[u].fwd) {
      int wk = f;
      while (!is_event(wk)) wk = nodes[wk].fwd[0];
      out.add_edge(nodes[u].name, nodes[wk].name);
    }
  }
  return out;
}

}  // namespace reebforge
