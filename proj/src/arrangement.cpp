// Region construction for a leveled tree.
//
// Frame: X1 = 0, X2 = L + 1, Y1 = 0; Y2 falls out of splitter stacking.
// Non-root leaves own unit strips at the right wall in DFS order; between
// consecutive strips sits one splitter circle centered on the wall whose
// radius reaches back to the column of the leaves' branching ancestor, so
// all splitters born at one branch vertex share a radius and their left
// tangency points stack at that vertex's event column. Marker circles bite
// the band boundaries: each bite's corner ends pin degree-2 Reeb vertices
// (or are absorbed at a branch column / a wall), and under a zero group-4
// exponent the bites double as sheet-gluing walls, so every edge a bite
// spans realizes singly and every uncovered edge doubles.
//
// Event columns: a vertex of level d gets its column in (d - 1/4, d + 1/4).
// Corners on line hosts sit at the integer level; corners on splitter
// hosts need a rational point of the circle, found by rational tangent
// parameterization near the level (two distinct host radii at one column
// is a bounded search that may fail, in which case the opening bite is
// dropped and its edges double).

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "marker_builder.hpp"
#include "reebforge/arrangement.hpp"

namespace reebforge {

namespace {

std::string edge_str(const std::pair<std::string, std::string>& e) {
  return e.first + "-" + e.second;
}

struct Builder {
  const LeveledEmbedding& e;
  std::array<int, 4> exps;
  Arrangement a;

  int K = 0;  // non-root leaves
  std::map<std::string, int> depth;
  std::map<std::string, std::pair<int, int>> slots;  // inclusive slot range
  std::vector<std::string> sep_lca;                  // per splitter index
  std::set<std::pair<std::string, std::string>> omitted;
  std::vector<BiteSpec> plan;
  std::map<std::string, Rat> xi;                       // internal event columns
  std::map<std::pair<std::string, int>, Rat> offsets;  // (vertex, splitter) -> s
  std::vector<Rat> sep_r, sep_c;

  explicit Builder(const LeveledEmbedding& emb, const std::array<int, 4>& exponents,
                   const CycleSelection& sel)
      : e(emb), exps(exponents) {
    for (int g = 0; g < 3; ++g)
      if (exps[g] < 1) throw std::invalid_argument("groups 1..3 need exponents >= 1");
    if (exps[3] < 0) throw std::invalid_argument("group 4 exponent must be >= 0");
    if (exps[3] > 0 && !sel.omitted_edges.empty())
      throw std::invalid_argument("edge omission requires a zero marker exponent");
    for (const auto& ed : sel.omitted_edges) omitted.insert(normalize_edge(ed));
  }

  std::pair<std::string, std::string> normalize_edge(
      const std::pair<std::string, std::string>& ed) const {
    auto p = e.parent_of.find(ed.second);
    if (p != e.parent_of.end() && p->second == ed.first) return ed;
    p = e.parent_of.find(ed.first);
    if (p != e.parent_of.end() && p->second == ed.second) return {ed.second, ed.first};
    throw std::invalid_argument("selection names a non-edge: " + edge_str(ed));
  }

  const std::vector<std::string>& kids(const std::string& v) const {
    return e.children_of.at(v);
  }
  bool is_leaf(const std::string& v) const { return kids(v).empty(); }

  void compute_slots() {
    std::map<std::string, int> leaf_slot;
    for (int i = 0; i < K; ++i) leaf_slot[e.leaf_order[i]] = i;
    std::function<void(const std::string&)> dfs = [&](const std::string& v) {
      if (is_leaf(v)) {
        slots[v] = {leaf_slot.at(v), leaf_slot.at(v)};
        return;
      }
      for (const auto& c : kids(v)) dfs(c);
      slots[v] = {slots.at(kids(v).front()).first, slots.at(kids(v).back()).second};
    };
    dfs(e.root);
    depth[e.root] = 0;
    std::vector<std::string> queue{e.root};
    for (size_t q = 0; q < queue.size(); ++q)
      for (const auto& c : kids(queue[q])) {
        depth[c] = depth[queue[q]] + 1;
        queue.push_back(c);
      }
  }

  std::string lca(std::string u, std::string v) const {
    while (depth.at(u) > depth.at(v)) u = e.parent_of.at(u);
    while (depth.at(v) > depth.at(u)) v = e.parent_of.at(v);
    while (u != v) {
      u = e.parent_of.at(u);
      v = e.parent_of.at(v);
    }
    return u;
  }

  // Host curve indices: S3 = 2, S4 = 3, splitter i = 4 + i.
  int bot_host(const std::string& v) const {
    int lo = slots.at(v).first;
    return lo == 0 ? 2 : 4 + (lo - 1);
  }
  int top_host(const std::string& v) const {
    int hi = slots.at(v).second;
    return hi == K - 1 ? 3 : 4 + hi;
  }
  int preferred_host(const std::string& v) const {
    if (slots.at(v).first == 0) return 2;
    if (slots.at(v).second == K - 1) return 3;
    return bot_host(v);
  }
  bool host_is_bot(const std::string& v, int h) const { return h == bot_host(v); }

  void note(const std::string& s) { a.notes.push_back(s); }
  void uncover(const std::pair<std::string, std::string>& ed) {
    if (std::find(a.uncovered_edges.begin(), a.uncovered_edges.end(), ed) ==
        a.uncovered_edges.end())
      a.uncovered_edges.push_back(ed);
  }

  static BiteEnd corner(const std::string& v, bool serves) {
    BiteEnd b;
    b.kind = BiteEnd::Kind::Corner;
    b.vertex = v;
    b.serves = serves;
    return b;
  }
  static BiteEnd wall_cut() {
    BiteEnd b;
    b.kind = BiteEnd::Kind::WallCut;
    return b;
  }

  void emit(int host, bool above, BiteEnd left, BiteEnd right,
            std::vector<std::pair<std::string, std::string>> covers) {
    BiteSpec s;
    s.host = host;
    s.band_above = above;
    s.left = std::move(left);
    s.right = std::move(right);
    s.covers = std::move(covers);
    plan.push_back(std::move(s));
  }

  // --- marker plan, minimal (group-4 exponent >= 1) ----------------------
  // Only degree-2 vertices need corners. Walk each maximal degree-2 chain,
  // pair consecutive vertices into one bite each; an odd tail bite either
  // runs out through the right wall (child is a leaf) or parks its second
  // corner at the child branch column, where it is absorbed.
  void plan_minimal() {
    for (int i = 0; i < e.tree.vertex_count(); ++i) {
      const std::string v = e.tree.vertex_id(i);
      if (v == e.root || is_leaf(v) || kids(v).size() != 1) continue;
      const std::string& par = e.parent_of.at(v);
      if (par != e.root && kids(par).size() == 1) continue;  // not a chain start
      std::vector<std::string> chain{v};
      while (kids(kids(chain.back()).front()).size() == 1)
        chain.push_back(kids(chain.back()).front());
      const std::string w = kids(chain.back()).front();
      int host = preferred_host(chain.front());
      bool above = host_is_bot(chain.front(), host);
      size_t t = 0;
      for (; t + 1 < chain.size(); t += 2)
        emit(host, above, corner(chain[t], true), corner(chain[t + 1], true), {});
      if (t < chain.size()) {
        if (is_leaf(w))
          emit(host, above, corner(chain[t], true), wall_cut(), {});
        else
          emit(host, above, corner(chain[t], true), corner(w, false), {});
      }
    }
  }

  // --- marker plan, full coverage (group-4 exponent == 0) ----------------
  // Every edge wants to lie under a bite arc so its two sheets glue. A run
  // is an open bite extending rightward on one host; it passes a branch
  // column only along the host that persists into the outer child (bottom
  // into the first, top into the last), so middle children are never
  // coverable and double. Degree-2 vertices with both edges covered close
  // one run and open the next on the opposite host: two corners at one
  // column, one degree-2 Reeb vertex.
  struct Run {
    int host;
    bool above;
    BiteEnd left;
    std::vector<std::pair<std::string, std::string>> covers;
  };

  void close_run(Run& r, BiteEnd right) {
    emit(r.host, r.above, std::move(r.left), std::move(right), std::move(r.covers));
  }

  void plan_full() {
    std::function<void(const std::string&, std::optional<Run>)> walk =
        [&](const std::string& v, std::optional<Run> run) {
          if (is_leaf(v)) {
            if (run) close_run(*run, wall_cut());
            return;
          }
          if (kids(v).size() == 1) {  // degree-2 vertex
            const std::string& w = kids(v).front();
            std::pair<std::string, std::string> ed{v, w};
            bool cov = !omitted.count(ed);
            if (run) close_run(*run, corner(v, true));
            if (!cov) {
              uncover(ed);
              if (!run)
                note("vertex " + v + " gets no corner: both incident edges uncovered");
              walk(w, std::nullopt);
              return;
            }
            int host = run ? (host_is_bot(v, run->host) ? top_host(v) : bot_host(v))
                           : preferred_host(v);
            walk(w, Run{host, host_is_bot(v, host), corner(v, true), {ed}});
            return;
          }
          // branch vertex
          int ib = bot_host(v), it = top_host(v);
          const auto& ks = kids(v);
          std::pair<std::string, std::string> e0{v, ks.front()}, eL{v, ks.back()};
          bool c0 = !omitted.count(e0), cL = !omitted.count(eL);
          std::optional<Run> first, last;
          if (run) {
            bool via_bot = run->host == ib;
            if (!via_bot && run->host != it)
              throw std::logic_error("run reached " + v + " on a foreign host");
            auto& through = via_bot ? e0 : eL;
            auto& through_run = via_bot ? first : last;
            if (!omitted.count(through)) {
              run->covers.push_back(through);
              through_run = std::move(run);
            } else {
              close_run(*run, corner(v, false));
              uncover(through);
            }
            auto& fresh = via_bot ? last : first;
            auto& fresh_edge = via_bot ? eL : e0;
            int fh = via_bot ? it : ib;
            if (!omitted.count(fresh_edge))
              fresh = Run{fh, fh == ib, corner(v, false), {fresh_edge}};
            else
              uncover(fresh_edge);
          } else {
            if (c0)
              first = Run{ib, true, corner(v, false), {e0}};
            else
              uncover(e0);
            if (cL)
              last = Run{it, false, corner(v, false), {eL}};
            else
              uncover(eL);
          }
          for (size_t m = 1; m + 1 < ks.size(); ++m) {
            uncover({v, ks[m]});
            note("edge " + v + "-" + ks[m] + " left uncovered: middle child of branch " + v);
          }
          walk(ks.front(), std::move(first));
          for (size_t m = 1; m + 1 < ks.size(); ++m) walk(ks[m], std::nullopt);
          walk(ks.back(), std::move(last));
        };

    const std::string& c = kids(e.root).front();
    std::pair<std::string, std::string> root_edge{e.root, c};
    if (!omitted.count(root_edge)) {
      walk(c, Run{2, true, wall_cut(), {root_edge}});
    } else {
      uncover(root_edge);
      walk(c, std::nullopt);
    }
  }

  // --- event columns ------------------------------------------------------
  // Vertices in (level, id) order; ancestors are solved first, so splitter
  // radii referenced by corner conditions are already fixed.
  void solve_columns() {
    std::vector<std::string> order;
    for (int i = 0; i < e.tree.vertex_count(); ++i) {
      const std::string v = e.tree.vertex_id(i);
      if (v != e.root && !is_leaf(v)) order.push_back(v);
    }
    std::sort(order.begin(), order.end(), [&](const std::string& u, const std::string& v) {
      int lu = e.level_of.at(u), lv = e.level_of.at(v);
      return lu != lv ? lu < lv : u < v;
    });

    for (const std::string& v : order) {
      Rat target(e.level_of.at(v));
      while (true) {
        std::set<int> seps;
        for (const BiteSpec& b : plan)
          if (b.host >= 4)
            for (const BiteEnd* end : {&b.left, &b.right})
              if (end->kind == BiteEnd::Kind::Corner && end->vertex == v)
                seps.insert(b.host - 4);
        if (seps.empty()) {
          xi[v] = target;
          break;
        }
        std::vector<std::pair<int, Rat>> conds;
        for (int s : seps) conds.push_back({s, a.X2 - xi.at(sep_lca[s])});
        if (conds.size() == 1 || conds[0].second == conds[1].second) {
          auto hp = detail::splitter_point_near(a.X2, conds[0].second, target);
          if (!hp) throw std::logic_error("no rational splitter point near column for " + v);
          xi[v] = hp->column;
          for (const auto& [s, rho] : conds) offsets[{v, s}] = hp->offset;
          break;
        }
        if (conds.size() != 2) throw std::logic_error("corner conditions exceed two at " + v);
        auto hp2 =
            detail::splitter_point_near2(a.X2, conds[0].second, conds[1].second, target);
        if (hp2) {
          xi[v] = hp2->first.column;
          offsets[{v, conds[0].first}] = hp2->first.offset;
          offsets[{v, conds[1].first}] = hp2->second.offset;
          break;
        }
        // No shared rational column on two distinct radii: drop the bite
        // opening at v (the last one planned) and let its edges double.
        if (exps[3] != 0) throw std::logic_error("two-splitter corner in minimal plan at " + v);
        int victim = -1;
        for (int i = 0; i < static_cast<int>(plan.size()); ++i)
          if (plan[i].left.kind == BiteEnd::Kind::Corner && plan[i].left.vertex == v &&
              plan[i].host >= 4)
            victim = i;
        if (victim < 0)
          throw std::logic_error("unsolvable two-splitter corner with no opening bite at " + v);
        std::string dropped;
        for (const auto& ed : plan[victim].covers) {
          uncover(ed);
          dropped += (dropped.empty() ? "" : ", ") + edge_str(ed);
        }
        note("no common rational point on two splitters near column " +
             std::to_string(e.level_of.at(v)) + " for " + v + "; dropped the bite covering " +
             dropped);
        plan.erase(plan.begin() + victim);
      }
    }
  }

  // --- assembly -----------------------------------------------------------
  void build() {
    K = static_cast<int>(e.leaf_order.size());
    a.X1 = Rat(0);
    a.X2 = Rat(e.level_count + 1);
    a.Y1 = Rat(0);
    a.exponents = exps;
    a.splitter_count = K - 1;
    compute_slots();
    for (int i = 0; i + 1 < K; ++i) sep_lca.push_back(lca(e.leaf_order[i], e.leaf_order[i + 1]));

    if (exps[3] > 0)
      plan_minimal();
    else
      plan_full();
    solve_columns();

    sep_r.resize(sep_lca.size());
    sep_c.resize(sep_lca.size());
    Rat cursor = a.Y1 + 1;
    for (size_t i = 0; i < sep_lca.size(); ++i) {
      sep_r[i] = a.X2 - xi.at(sep_lca[i]);
      sep_c[i] = cursor + sep_r[i];
      cursor = sep_c[i] + sep_r[i] + 1;
    }
    a.Y2 = cursor;

    a.curves.push_back(Curve::vline(a.X1, +1, 1, "S1"));
    a.curves.push_back(Curve::vline(a.X2, -1, 1, "S2"));
    a.curves.push_back(Curve::hline(a.Y1, +1, 2, "S3"));
    a.curves.push_back(Curve::hline(a.Y2, -1, 2, "S4"));
    for (size_t i = 0; i < sep_lca.size(); ++i)
      a.curves.push_back(Curve::circle(a.X2, sep_c[i], sep_r[i] * sep_r[i], 3,
                                       "splitter" + std::to_string(i + 1), sep_r[i]));

    a.event_column[e.root] = a.X1;
    for (const std::string& lf : e.leaf_order) a.event_column[lf] = a.X2;
    for (const auto& [v, x] : xi) a.event_column[v] = x;

    for (BiteSpec& spec : plan) {
      detail::BiteGeometry g;
      for (BiteEnd* end : {&spec.left, &spec.right}) {
        if (end->kind != BiteEnd::Kind::Corner) continue;
        end->column = xi.at(end->vertex);
        Rat y;
        if (spec.host == 2)
          y = a.Y1;
        else if (spec.host == 3)
          y = a.Y2;
        else {
          int s = spec.host - 4;
          Rat off = offsets.at({end->vertex, s});
          y = spec.band_above ? Rat(sep_c[s] + off) : Rat(sep_c[s] - off);
        }
        (end == &spec.left ? g.left_corner : g.right_corner) = std::make_pair(end->column, y);
      }
      if (spec.left.kind == BiteEnd::Kind::WallCut) spec.left.column = a.X1;
      if (spec.right.kind == BiteEnd::Kind::WallCut) spec.right.column = a.X2;
      if (!detail::build_bite(a, spec, g))
        throw std::runtime_error("marker construction failed for bite at " +
                                 (spec.left.kind == BiteEnd::Kind::Corner ? spec.left.vertex
                                                                          : spec.right.vertex));
      a.bites.push_back(spec);
    }

    pick_seed();
  }

  void pick_seed() {
    Rat x(1, 2);
    std::vector<Rat> ys{(a.Y1 + a.Y2) / 2, a.Y1 + Rat(3, 4), a.Y2 - Rat(3, 4),
                        a.Y1 + Rat(1, 4), a.Y2 - Rat(1, 4)};
    Rat lo = a.Y1;
    for (size_t i = 0; i < sep_c.size(); ++i) {
      ys.push_back((lo + sep_c[i] - sep_r[i]) / 2);
      lo = sep_c[i] + sep_r[i];
    }
    ys.push_back((lo + a.Y2) / 2);
    for (const Rat& y : ys)
      if (in_open_region(a, x, y)) {
        a.region_seed = {x, y};
        return;
      }
    throw std::logic_error("no interior seed found at x = 1/2");
  }
};

}  // namespace

Arrangement build_arrangement(const LeveledEmbedding& e, const std::array<int, 4>& exponents,
                              const CycleSelection& selection) {
  if (e.leaf_order.empty() || e.children_of.empty())
    throw std::invalid_argument("embedding is missing its drawing data");
  Builder b(e, exponents, selection);
  b.build();
  return std::move(b.a);
}

}  // namespace reebforge
