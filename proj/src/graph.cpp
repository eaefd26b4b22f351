#include "reebforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace reebforge {

int Multigraph::add_vertex(const std::string& id) {
  if (index_.count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
  int i = static_cast<int>(ids_.size());
  ids_.push_back(id);
  index_[id] = i;
  return i;
}

int Multigraph::ensure_vertex(const std::string& id) {
  auto it = index_.find(id);
  if (it != index_.end()) return it->second;
  return add_vertex(id);
}

void Multigraph::add_edge(const std::string& u, const std::string& v) {
  auto iu = vertex_index(u), iv = vertex_index(v);
  if (!iu || !iv) throw std::invalid_argument("edge references unknown vertex");
  add_edge(*iu, *iv);
}

void Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("self-loops are forbidden");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

std::optional<int> Multigraph::vertex_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::vector<int> Multigraph::neighbors(int v) const {
  std::set<int> out;
  for (auto& [a, b] : edges_) {
    if (a == v) out.insert(b);
    if (b == v) out.insert(a);
  }
  return {out.begin(), out.end()};
}

int Multigraph::multiplicity(int u, int v) const {
  auto key = std::minmax(u, v);
  int m = 0;
  for (auto& e : edges_)
    if (e.first == key.first && e.second == key.second) ++m;
  return m;
}

bool Multigraph::is_connected() const {
  int n = vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto& [a, b] : edges_) {
      int w = a == v ? b : (b == v ? a : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

int first_betti(const Multigraph& g) {
  if (!g.is_connected()) throw std::runtime_error("not connected");
  return g.edge_count() - g.vertex_count() + 1;
}

bool is_tree(const Multigraph& g) { return g.is_connected() && first_betti(g) == 0; }

namespace {

// Stable color refinement: start from degrees, refine by the multiset of
// (neighbor color, bundle multiplicity) until the partition stops moving.
std::vector<int> refine_colors(const Multigraph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n + 1; ++round) {
    std::vector<std::vector<std::pair<int, int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      for (int w : g.neighbors(v)) sig[v].emplace_back(color[w], g.multiplicity(v, w));
      std::sort(sig[v].begin(), sig[v].end());
    }
    // New color = rank of the signature among this graph's sorted distinct
    // signatures. Isomorphic graphs share the signature multiset at every
    // round, so ranks align across graphs (first-seen numbering would not).
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> palette;
    for (int v = 0; v < n; ++v) palette[{color[v], sig[v]}] = 0;
    int rank = 0;
    for (auto& [key, slot] : palette) slot = rank++;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = palette.at({color[v], sig[v]});
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool class_histograms_match(const std::vector<int>& a, const std::vector<int>& b) {
  auto hist = [](const std::vector<int>& c) {
    std::map<int, int> h;
    for (int x : c) ++h[x];
    return h;
  };
  return hist(a) == hist(b);
}

}  // namespace

std::optional<GraphIso> are_isomorphic(const Multigraph& g, const Multigraph& h) {
  int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::nullopt;

  auto cg = refine_colors(g), ch = refine_colors(h);
  if (!class_histograms_match(cg, ch)) return std::nullopt;

  // Map g vertices in order of (rare color first, then id) for early cuts.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ka = std::make_tuple(class_size[cg[a]], cg[a], g.vertex_id(a));
    auto kb = std::make_tuple(class_size[cg[b]], cg[b], g.vertex_id(b));
    return ka < kb;
  });
  // Candidate lists in lexicographic id order for determinism.
  std::vector<int> h_order(n);
  std::iota(h_order.begin(), h_order.end(), 0);
  std::sort(h_order.begin(), h_order.end(),
            [&](int a, int b) { return h.vertex_id(a) < h.vertex_id(b); });

  std::vector<int> map_gh(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](int v, int w) {
    if (cg[v] != ch[w]) return false;
    for (int u = 0; u < n; ++u) {
      if (map_gh[u] < 0) continue;
      if (g.multiplicity(v, u) != h.multiplicity(w, map_gh[u])) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, size_t depth) -> bool {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w : h_order) {
      if (used[w] || !consistent(v, w)) continue;
      map_gh[v] = w;
      used[w] = 1;
      if (self(self, depth + 1)) return true;
      map_gh[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  GraphIso iso;
  for (int v = 0; v < n; ++v) iso.vertex_map[g.vertex_id(v)] = h.vertex_id(map_gh[v]);
  std::set<std::pair<int, int>> bundles(g.edges().begin(), g.edges().end());
  for (auto& [a, b] : bundles) {
    GraphIso::Bundle bu;
    bu.from = {g.vertex_id(a), g.vertex_id(b)};
    auto ma = h.vertex_id(map_gh[a]), mb = h.vertex_id(map_gh[b]);
    bu.to = std::minmax(ma, mb);
    bu.multiplicity = g.multiplicity(a, b);
    iso.edge_multiplicity_witness.push_back(std::move(bu));
  }
  return iso;
}

std::string tree_canonical_code(const Multigraph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_canonical_code needs a tree");
  int n = t.vertex_count();
  if (n == 1) return "()";

  // Centers: peel leaves until <= 2 vertices remain.
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<int> layer;
  int alive = n;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  while (alive > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --alive;
      for (int w : t.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }

  // AHU code rooted at a given center.
  auto rooted = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v))
      if (w != parent) kids.push_back(self(self, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };

  std::string best;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    std::string code = rooted(rooted, v, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

Multigraph smooth_degree2(const Multigraph& g) {
  if (!g.is_connected()) throw std::runtime_error("not connected");
  int n = g.vertex_count();

  // A pure cycle has no suppression fixed point short of a self-loop, so
  // contract it to the canonical two-vertex double edge directly.
  bool all_deg2 = n >= 2;
  for (int v = 0; v < n && all_deg2; ++v) all_deg2 = g.degree(v) == 2;
  if (all_deg2) {
    std::vector<std::string> ids;
    for (int v = 0; v < n; ++v) ids.push_back(g.vertex_id(v));
    std::sort(ids.begin(), ids.end());
    Multigraph c2;
    c2.add_vertex(ids[0]);
    c2.add_vertex(ids.size() > 1 ? ids[1] : ids[0] + "'");
    c2.add_edge(0, 1);
    c2.add_edge(0, 1);
    return c2;
  }

  std::vector<char> alive(n, 1);
  std::vector<std::pair<int, int>> edges = g.edges();
  auto degree_of = [&](int v) {
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || degree_of(v) != 2) continue;
      int e1 = -1, e2 = -1;
      for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].first == v || edges[i].second == v) (e1 < 0 ? e1 : e2) = i;
      int a = edges[e1].first == v ? edges[e1].second : edges[e1].first;
      int b = edges[e2].first == v ? edges[e2].second : edges[e2].first;
      if (a == b) continue;  // parallel bundle endpoint: suppression would self-loop
      edges.erase(edges.begin() + e2);
      edges.erase(edges.begin() + e1);
      edges.emplace_back(std::min(a, b), std::max(a, b));
      alive[v] = 0;
      changed = true;
    }
  }

  Multigraph out;
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) remap[v] = out.add_vertex(g.vertex_id(v));
  for (auto& [a, b] : edges) out.add_edge(remap[a], remap[b]);
  return out;
}

}  // namespace reebforge
