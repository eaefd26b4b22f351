#pragma once

#include <vector>

#include "reebforge/graph.hpp"

namespace reebforge {

// One representative per isomorphism class of trees on n vertices,
// 1 <= n <= 12, in canonical-code order. Generated from rooted level
// sequences (successor walk) and deduplicated by tree_canonical_code.
// Class counts for n = 1..9: 1, 1, 1, 2, 3, 6, 11, 23, 47.
std::vector<Multigraph> enumerate_trees(int n);

// One representative per isomorphism class of connected multigraphs with
// 1..max_edges edges (self-loops excluded, every vertex covered by an
// edge). Deduplicated by minimum-over-permutations edge signature, so
// max_edges is capped at 6 to keep the brute-force signature cheap.
std::vector<Multigraph> enumerate_connected_multigraphs(int max_edges);

}  // namespace reebforge
