#pragma once

#include <map>
#include <string>
#include <vector>

#include "reebforge/graph.hpp"
#include "reebforge/rational.hpp"

namespace reebforge {

// A tree drawn left-to-right: the root (a leaf) sits alone at level 1,
// internal vertices at depth d sit at level d+1, and every other leaf is
// stretched to the common last level L. Gap a is the open span between
// levels a and a+1; an edge (u, v) with level(u) < level(v) covers gaps
// level(u) .. level(v)-1. The per-gap edge counts start at 1 and never
// decrease, which is what makes the later one-pass geometric construction
// possible.
//
// Lanes model the vertical order of the drawing: each non-root leaf gets a
// unit slot (DFS order), every vertex's band is the hull of its subtree's
// slots, and an edge occupies its child's band over every gap it covers.
// Bands of edges alive in a common gap are nested or interior-disjoint.
struct LeveledEmbedding {
  Multigraph tree;
  std::string root;
  std::map<std::string, int> level_of;
  std::map<std::string, Rat> lane_of;  // band midpoints
  int level_count = 0;                 // L
  std::vector<int> gap_count;          // gap_count[a-1] = #edges over gap a
  std::vector<std::vector<int>> gap_edges;  // edge indices into tree.edges()

  // Derived drawing data consumed by the arrangement stage.
  std::map<std::string, std::string> parent_of;           // all but root
  std::map<std::string, std::vector<std::string>> children_of;  // id-sorted
  std::vector<std::string> leaf_order;                     // non-root leaves, DFS
  std::vector<std::pair<Rat, Rat>> edge_band;              // per edge index
};

// Builds the embedding. root, when given, must be a leaf; the default is
// the lexicographically least leaf. Throws on non-trees, edgeless trees,
// and non-leaf roots.
LeveledEmbedding level_tree(const Multigraph& t, const std::string& root = "");

// Checks every invariant above; returns one message per violation
// (empty = pass).
std::vector<std::string> validate_leveling(const LeveledEmbedding& e);

}  // namespace reebforge
