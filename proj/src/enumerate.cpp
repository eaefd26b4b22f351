#include "reebforge/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reebforge {

std::vector<Multigraph> enumerate_trees(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("enumerate_trees supports 1 <= n <= 12");
  std::map<std::string, Multigraph> classes;
  if (n == 1) {
    Multigraph t;
    t.add_vertex("v1");
    classes.emplace(tree_canonical_code(t), t);
  }
  // Walk all rooted level sequences: start at the path 1,2,...,n; the
  // successor decrements the last entry above 2 and tiles the tail with
  // the block ending just before it. Terminates at the star 1,2,2,...,2.
  std::vector<int> L(n);
  std::iota(L.begin(), L.end(), 1);
  while (n >= 2) {
    Multigraph t;
    for (int i = 0; i < n; ++i) t.add_vertex("v" + std::to_string(i + 1));
    for (int i = 1; i < n; ++i) {
      for (int j = i - 1; j >= 0; --j) {
        if (L[j] == L[i] - 1) {
          t.add_edge(j, i);
          break;
        }
      }
    }
    classes.emplace(tree_canonical_code(t), t);

    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (L[i] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (L[i] == L[p] - 1) {
        q = i;
        break;
      }
    }
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
  }
  std::vector<Multigraph> out;
  out.reserve(classes.size());
  for (auto& [code, t] : classes) out.push_back(t);
  return out;
}

namespace {

// Canonical signature by minimizing the sorted edge list over all vertex
// permutations. Exponential, reserved for the <= 6-edge enumeration.
std::string perm_min_signature(const Multigraph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges().size());
    for (auto& [a, b] : g.edges()) es.push_back(std::minmax(perm[a], perm[b]));
    std::sort(es.begin(), es.end());
    std::string s;
    for (auto& [a, b] : es) s += std::to_string(a) + "," + std::to_string(b) + ";";
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + "|" + best;
}

}  // namespace

std::vector<Multigraph> enumerate_connected_multigraphs(int max_edges) {
  if (max_edges < 1 || max_edges > 6)
    throw std::invalid_argument("enumerate_connected_multigraphs supports 1..6 edges");
  std::map<std::string, Multigraph> classes;
  for (int m = 1; m <= max_edges; ++m) {
    for (int n = 2; n <= m + 1; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      // Non-decreasing index tuples = multisets of m edges over the pairs.
      std::vector<int> pick(m, 0);
      while (true) {
        Multigraph g;
        for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1));
        for (int k : pick) g.add_edge(pairs[k].first, pairs[k].second);
        bool covers = true;
        for (int v = 0; v < n && covers; ++v) covers = g.degree(v) > 0;
        if (covers && g.is_connected()) classes.emplace(perm_min_signature(g), g);
        // Odometer step over non-decreasing tuples.
        int i = m - 1;
        while (i >= 0 && pick[i] == static_cast<int>(pairs.size()) - 1) --i;
        if (i < 0) break;
        int v = pick[i] + 1;
        for (int j = i; j < m; ++j) pick[j] = v;
      }
    }
  }
  std::vector<Multigraph> out;
  out.reserve(classes.size());
  for (auto& [sig, g] : classes) out.push_back(g);
  return out;
}

}  // namespace reebforge
