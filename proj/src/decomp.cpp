#include "reebforge/decomp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace reebforge {

std::vector<bool> bridge_flags(const Multigraph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  // Incidence lists keyed by edge index so parallel edges stay distinct:
  // the second copy of an edge acts as a back edge and protects the first.
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < m; ++e) {
    auto [a, b] = g.edges()[e];
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> bridge(m, false);
  int timer = 0;
  // Iterative DFS: frame = (vertex, entering edge id, next adjacency slot).
  struct Frame {
    int v, in_edge;
    size_t slot;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.slot < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.slot++];
        if (e == f.in_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          auto& p = stack.back();
          low[p.v] = std::min(low[p.v], low[f.v]);
          if (low[f.v] > disc[p.v]) bridge[f.in_edge] = true;
        }
      }
    }
  }
  return bridge;
}

TreeDecomposition tree_decomposition(const Multigraph& g) {
  if (!g.is_connected()) throw std::runtime_error("not connected");
  int n = g.vertex_count();
  int m = g.edge_count();
  auto bridge = bridge_flags(g);

  // Union-find over vertices joined by non-bridge edges: each class with
  // edges is one maximal bridgeless piece.
  std::vector<int> uf(n);
  for (int i = 0; i < n; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int e = 0; e < m; ++e) {
    if (bridge[e]) continue;
    auto [a, b] = g.edges()[e];
    uf[find(a)] = find(b);
  }

  struct Raw {
    std::vector<int> vertices;  // sorted by id
    std::vector<std::pair<int, int>> edges;
    PieceKind kind;
  };
  std::vector<Raw> raw;
  std::map<int, int> class_to_piece;
  for (int e = 0; e < m; ++e) {
    auto [a, b] = g.edges()[e];
    if (bridge[e]) {
      raw.push_back({{a, b}, {{a, b}}, PieceKind::Bridge});
    } else {
      int c = find(a);
      auto it = class_to_piece.find(c);
      if (it == class_to_piece.end()) {
        it = class_to_piece.emplace(c, static_cast<int>(raw.size())).first;
        raw.push_back({{}, {}, PieceKind::Bridgeless});
      }
      raw[it->second].edges.emplace_back(a, b);
    }
  }
  for (auto& r : raw) {
    std::set<int> vs(r.vertices.begin(), r.vertices.end());
    for (auto& [a, b] : r.edges) {
      vs.insert(a);
      vs.insert(b);
    }
    r.vertices.assign(vs.begin(), vs.end());
  }

  // Canonical order: lexicographic on the sorted vertex-id lists (two
  // distinct pieces can never have the same vertex set).
  std::sort(raw.begin(), raw.end(), [&](const Raw& x, const Raw& y) {
    std::vector<std::string> ix, iy;
    for (int v : x.vertices) ix.push_back(g.vertex_id(v));
    for (int v : y.vertices) iy.push_back(g.vertex_id(v));
    std::sort(ix.begin(), ix.end());
    std::sort(iy.begin(), iy.end());
    return ix < iy;
  });

  TreeDecomposition d;
  for (auto& r : raw) {
    DecompPiece p;
    p.kind = r.kind;
    for (int v : r.vertices) p.graph.add_vertex(g.vertex_id(v));
    for (auto& [a, b] : r.edges) p.graph.add_edge(g.vertex_id(a), g.vertex_id(b));
    d.pieces.push_back(std::move(p));
  }

  int count = static_cast<int>(d.pieces.size());
  for (int i = 0; i < count; ++i) d.tree.add_vertex(std::to_string(i));

  // Pieces containing each vertex id.
  std::map<std::string, std::vector<int>> pieces_at;
  for (int i = 0; i < count; ++i)
    for (int v = 0; v < d.pieces[i].graph.vertex_count(); ++v)
      pieces_at[d.pieces[i].graph.vertex_id(v)].push_back(i);

  // Canonical code of the branch hanging off vertex `vid` through piece
  // `pi`: the piece's own shape with `vid` pinned, each other vertex
  // annotated by the sorted codes of its sub-branches. Distinct pieces at
  // a vertex occupy distinct components of the graph minus that vertex,
  // so this recursion walks each (vertex, piece) pair once.
  auto branch_code = [&](auto&& self, const std::string& vid, int pi) -> std::string {
    const Multigraph& p = d.pieces[pi].graph;
    int pn = p.vertex_count();
    std::vector<std::string> ann(pn);
    for (int w = 0; w < pn; ++w) {
      if (p.vertex_id(w) == vid) continue;
      std::vector<std::string> subs;
      for (int q : pieces_at[p.vertex_id(w)])
        if (q != pi) subs.push_back(self(self, p.vertex_id(w), q));
      std::sort(subs.begin(), subs.end());
      for (auto& s : subs) ann[w] += "{" + s + "}";
    }
    int pinned = *p.vertex_index(vid);
    std::vector<int> others;
    for (int w = 0; w < pn; ++w)
      if (w != pinned) others.push_back(w);
    std::string best;
    std::sort(others.begin(), others.end());
    do {
      std::vector<int> pos(pn);
      pos[pinned] = 0;
      for (size_t k = 0; k < others.size(); ++k) pos[others[k]] = static_cast<int>(k) + 1;
      std::vector<std::pair<int, int>> es;
      for (auto& [a, b] : p.edges()) es.push_back(std::minmax(pos[a], pos[b]));
      std::sort(es.begin(), es.end());
      std::string s;
      for (auto& [a, b] : es) s += std::to_string(a) + "," + std::to_string(b) + ";";
      std::vector<std::string> by_pos(pn);
      for (int w = 0; w < pn; ++w) by_pos[pos[w]] = ann[w];
      s += "|";
      for (auto& a : by_pos) s += a + "/";
      if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(others.begin(), others.end()));
    return best;
  };

  // Star the pieces at each shared vertex around the piece with the
  // smallest branch code (a label-independent choice, so relabeling the
  // input yields an isomorphic tree). With two pieces this is exactly
  // "edge iff the pieces intersect".
  for (auto& [vid, at] : pieces_at) {
    if (at.size() < 2) continue;
    for (size_t a = 0; a < at.size(); ++a)
      for (size_t b = a + 1; b < at.size(); ++b)
        d.incidence[{at[a], at[b]}] = vid;
    size_t hub = 0;
    std::string hub_code;
    for (size_t k = 0; k < at.size(); ++k) {
      std::string code = branch_code(branch_code, vid, at[k]);
      if (k == 0 || code < hub_code) {
        hub = k;
        hub_code = std::move(code);
      }
    }
    for (size_t k = 0; k < at.size(); ++k)
      if (k != hub) d.tree.add_edge(at[hub], at[k]);
  }
  return d;
}

bool is_sct(const TreeDecomposition& d) {
  for (auto& p : d.pieces) {
    int v = p.graph.vertex_count(), e = p.graph.edge_count();
    if (v == 2 && (e == 1 || e == 2)) continue;
    return false;
  }
  return true;
}

bool is_tree_by_sct(const Multigraph& g) {
  auto d = tree_decomposition(g);
  if (!is_sct(d)) return false;
  for (auto& p : d.pieces)
    if (p.graph.edge_count() != 1) return false;
  return true;
}

std::vector<std::string> validate_decomposition(const Multigraph& g, const TreeDecomposition& d) {
  std::vector<std::string> issues;
  // Edge partition: the multiset of piece edges equals the graph's edges.
  std::multiset<std::pair<std::string, std::string>> have, want;
  for (auto& [a, b] : g.edges())
    want.insert(std::minmax(g.vertex_id(a), g.vertex_id(b)));
  for (auto& p : d.pieces)
    for (auto& [a, b] : p.graph.edges())
      have.insert(std::minmax(p.graph.vertex_id(a), p.graph.vertex_id(b)));
  if (have != want) issues.push_back("piece edges do not partition the input edges");

  // Pairwise intersections: empty or a single vertex, matching incidence.
  int count = static_cast<int>(d.pieces.size());
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      std::vector<std::string> shared;
      for (int v = 0; v < d.pieces[i].graph.vertex_count(); ++v) {
        auto id = d.pieces[i].graph.vertex_id(v);
        if (d.pieces[j].graph.vertex_index(id)) shared.push_back(id);
      }
      if (shared.size() > 1)
        issues.push_back("pieces " + std::to_string(i) + "," + std::to_string(j) +
                         " share more than one vertex");
      auto inc = d.incidence.find({i, j});
      bool recorded = inc != d.incidence.end();
      if (recorded != (shared.size() == 1))
        issues.push_back("incidence map disagrees with actual intersections");
      else if (recorded && inc->second != shared[0])
        issues.push_back("incidence map names the wrong shared vertex");
    }
  }

  if (!d.tree.is_connected() || d.tree.edge_count() != d.tree.vertex_count() - 1)
    issues.push_back("intersection graph is not a tree");
  if (d.tree.vertex_count() != count) issues.push_back("tree vertex count != piece count");
  for (auto& [a, b] : d.tree.edges()) {
    int i = std::stoi(d.tree.vertex_id(a)), j = std::stoi(d.tree.vertex_id(b));
    if (!d.incidence.count(std::minmax(i, j)))
      issues.push_back("tree edge joins disjoint pieces");
  }
  return issues;
}

}  // namespace reebforge
