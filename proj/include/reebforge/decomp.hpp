#pragma once

#include <map>
#include <string>
#include <vector>

#include "reebforge/graph.hpp"

namespace reebforge {

enum class PieceKind { Bridge, Bridgeless };

struct DecompPiece {
  Multigraph graph;  // subgraph with the original vertex ids
  PieceKind kind = PieceKind::Bridge;
};

// Splitting of a connected multigraph into bridges and maximal bridgeless
// subgraphs, plus the intersection tree over the pieces.
//
// When three or more pieces meet at one cut vertex (a star center, say),
// connecting every intersecting pair would create a clique, which is no
// tree; the canonical intersection tree instead stars those pieces around
// the lowest-indexed piece at that vertex. With at most two pieces per
// cut vertex this coincides with "edge iff the pieces intersect". The
// full intersection relation is preserved in `incidence`.
struct TreeDecomposition {
  std::vector<DecompPiece> pieces;  // sorted by their sorted vertex-id lists
  Multigraph tree;                  // vertex ids = decimal piece indices
  // Every intersecting piece pair (i < j) -> the single shared vertex id.
  std::map<std::pair<int, int>, std::string> incidence;
};

// Per-edge bridge flags (parallel-edge aware: a doubled edge is never a
// bridge). Indices follow g.edges() order.
std::vector<bool> bridge_flags(const Multigraph& g);

// Throws on disconnected input.
TreeDecomposition tree_decomposition(const Multigraph& g);

// True iff every piece is a single edge or a two-vertex double edge.
bool is_sct(const TreeDecomposition& d);

// True iff the decomposition is SCT with only single-edge pieces; agrees
// with is_tree on every connected multigraph.
bool is_tree_by_sct(const Multigraph& g);

// Diagnostics for the decomposition invariants (edge partition, union,
// one-point intersections, tree-ness, adjacency implying intersection).
// Empty result = all hold.
std::vector<std::string> validate_decomposition(const Multigraph& g, const TreeDecomposition& d);

}  // namespace reebforge
