#include "reebforge/leveling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace reebforge {

LeveledEmbedding level_tree(const Multigraph& t, const std::string& root) {
  if (!is_tree(t)) throw std::invalid_argument("level_tree needs a tree");
  if (t.edge_count() == 0) throw std::invalid_argument("tree needs at least one edge");
  int n = t.vertex_count();

  LeveledEmbedding e;
  e.tree = t;

  if (root.empty()) {
    for (int v = 0; v < n; ++v)
      if (t.degree(v) == 1 && (e.root.empty() || t.vertex_id(v) < e.root))
        e.root = t.vertex_id(v);
  } else {
    auto idx = t.vertex_index(root);
    if (!idx) throw std::invalid_argument("root vertex not found: " + root);
    if (t.degree(*idx) != 1) throw std::invalid_argument("root must be a leaf");
    e.root = root;
  }

  // Depths and parent/children maps; children sorted by id for the
  // deterministic DFS lane order.
  int root_idx = *t.vertex_index(e.root);
  std::vector<int> depth(n, -1);
  depth[root_idx] = 0;
  std::vector<int> queue{root_idx};
  for (size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    for (int w : t.neighbors(v)) {
      if (depth[w] >= 0) continue;
      depth[w] = depth[v] + 1;
      e.parent_of[t.vertex_id(w)] = t.vertex_id(v);
      queue.push_back(w);
    }
  }
  for (int v = 0; v < n; ++v) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v))
      if (w != root_idx && e.parent_of.at(t.vertex_id(w)) == t.vertex_id(v))
        kids.push_back(t.vertex_id(w));
    std::sort(kids.begin(), kids.end());
    e.children_of[t.vertex_id(v)] = std::move(kids);
  }

  // Levels: root 1, internal depth+1, every other leaf at the last level.
  int max_internal_level = 1;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) > 1) max_internal_level = std::max(max_internal_level, depth[v] + 1);
  e.level_count = max_internal_level + 1;
  for (int v = 0; v < n; ++v) {
    const std::string& id = t.vertex_id(v);
    if (v == root_idx)
      e.level_of[id] = 1;
    else if (t.degree(v) == 1)
      e.level_of[id] = e.level_count;
    else
      e.level_of[id] = depth[v] + 1;
  }

  // DFS leaf slots: non-root leaf k owns [k, k+1], vertices own the hull
  // of their subtree's slots.
  std::map<std::string, std::pair<Rat, Rat>> band;
  auto dfs = [&](auto&& self, const std::string& v) -> void {
    const auto& kids = e.children_of.at(v);
    if (kids.empty()) {
      Rat k(static_cast<long>(e.leaf_order.size()));
      e.leaf_order.push_back(v);
      band[v] = {k, k + 1};
      return;
    }
    for (const auto& c : kids) self(self, c);
    band[v] = {band.at(kids.front()).first, band.at(kids.back()).second};
  };
  dfs(dfs, e.root);
  for (auto& [v, b] : band) e.lane_of[v] = (b.first + b.second) / 2;

  // Gap coverage: edge over gaps level(u) .. level(v)-1.
  e.gap_count.assign(e.level_count - 1, 0);
  e.gap_edges.assign(e.level_count - 1, {});
  e.edge_band.resize(t.edge_count());
  for (int i = 0; i < t.edge_count(); ++i) {
    auto [a, b] = t.edges()[i];
    std::string ia = t.vertex_id(a), ib = t.vertex_id(b);
    if (e.level_of.at(ia) > e.level_of.at(ib)) std::swap(ia, ib);
    for (int gap = e.level_of.at(ia); gap < e.level_of.at(ib); ++gap) {
      e.gap_edges[gap - 1].push_back(i);
      ++e.gap_count[gap - 1];
    }
    e.edge_band[i] = band.at(ib);  // the child's band
  }
  return e;
}

std::vector<std::string> validate_leveling(const LeveledEmbedding& e) {
  std::vector<std::string> issues;
  const Multigraph& t = e.tree;
  if (!is_tree(t)) {
    issues.push_back("underlying graph is not a tree");
    return issues;
  }
  auto root_idx = t.vertex_index(e.root);
  if (!root_idx) {
    issues.push_back("root vertex missing");
    return issues;
  }

  int at_level1 = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    auto it = e.level_of.find(t.vertex_id(v));
    if (it == e.level_of.end()) {
      issues.push_back("vertex " + t.vertex_id(v) + " has no level");
      return issues;
    }
    if (it->second == 1) ++at_level1;
  }
  if (e.level_of.at(e.root) != 1) issues.push_back("root is not at level 1");
  if (at_level1 != 1) issues.push_back("gap_count[1] != 1 (level 1 holds " +
                                       std::to_string(at_level1) + " vertices)");

  // Recompute gap coverage from the levels and compare.
  int gaps = e.level_count - 1;
  if (static_cast<int>(e.gap_count.size()) != gaps ||
      static_cast<int>(e.gap_edges.size()) != gaps) {
    issues.push_back("gap arrays sized inconsistently with level_count");
    return issues;
  }
  std::vector<std::set<int>> cover(gaps);
  for (int i = 0; i < t.edge_count(); ++i) {
    auto [a, b] = t.edges()[i];
    int la = e.level_of.at(t.vertex_id(a)), lb = e.level_of.at(t.vertex_id(b));
    if (la == lb) {
      issues.push_back("edge " + std::to_string(i) + " joins equal levels");
      continue;
    }
    for (int gap = std::min(la, lb); gap < std::max(la, lb); ++gap) {
      if (gap < 1 || gap > gaps) {
        issues.push_back("edge " + std::to_string(i) + " covers out-of-range gap");
        break;
      }
      cover[gap - 1].insert(i);
    }
  }
  for (int gap = 0; gap < gaps; ++gap) {
    std::set<int> declared(e.gap_edges[gap].begin(), e.gap_edges[gap].end());
    if (declared != cover[gap])
      issues.push_back("gap_edges[" + std::to_string(gap + 1) + "] mismatches the levels");
    if (e.gap_count[gap] != static_cast<int>(cover[gap].size()))
      issues.push_back("gap_count[" + std::to_string(gap + 1) + "] mismatches the levels");
  }
  if (gaps > 0 && e.gap_count[0] != 1) issues.push_back("gap_count[1] != 1");
  for (int gap = 0; gap + 1 < gaps; ++gap)
    if (e.gap_count[gap] > e.gap_count[gap + 1])
      issues.push_back("gap_count decreases at gap " + std::to_string(gap + 2));

  // Planarity: bands of edges sharing a gap must be nested or meet in at
  // most a boundary point.
  if (static_cast<int>(e.edge_band.size()) != t.edge_count()) {
    issues.push_back("edge_band sized inconsistently");
    return issues;
  }
  for (int gap = 0; gap < gaps; ++gap) {
    const auto& es = e.gap_edges[gap];
    for (size_t x = 0; x < es.size(); ++x) {
      for (size_t y = x + 1; y < es.size(); ++y) {
        auto [lo1, hi1] = e.edge_band[es[x]];
        auto [lo2, hi2] = e.edge_band[es[y]];
        bool disjoint = hi1 <= lo2 || hi2 <= lo1;
        bool nested = (lo1 <= lo2 && hi2 <= hi1) || (lo2 <= lo1 && hi1 <= hi2);
        if (!disjoint && !nested)
          issues.push_back("lanes cross: edges " + std::to_string(es[x]) + " and " +
                           std::to_string(es[y]) + " over gap " + std::to_string(gap + 1));
      }
    }
  }

  // Count identities: the last gap carries one edge per non-root leaf, and
  // branchings account for the total growth.
  int leaves = 0, growth = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) == 1 && v != *root_idx) ++leaves;
    if (t.degree(v) > 1) {
      auto it = e.children_of.find(t.vertex_id(v));
      int kids = it == e.children_of.end() ? 0 : static_cast<int>(it->second.size());
      growth += kids - 1;
    }
  }
  if (gaps > 0 && e.gap_count[gaps - 1] != leaves)
    issues.push_back("last gap count != number of non-root leaves");
  if (gaps > 0 && e.gap_count[gaps - 1] - 1 != growth)
    issues.push_back("branching growth identity fails");
  return issues;
}

}  // namespace reebforge
