#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reebforge {

// Finite connected multigraph: opaque string vertex ids, unordered edges,
// parallel edges allowed, self-loops forbidden. Everything downstream
// (tree decompositions, leveled embeddings, Reeb graphs) is one of these.
class Multigraph {
 public:
  Multigraph() = default;

  // Returns the index of the new vertex; throws on duplicate id.
  int add_vertex(const std::string& id);
  // Adds vertex if missing, returns its index either way.
  int ensure_vertex(const std::string& id);
  // Throws on self-loops or unknown ids. Parallel edges stack up.
  void add_edge(const std::string& u, const std::string& v);
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_id(int i) const { return ids_.at(i); }
  std::optional<int> vertex_index(const std::string& id) const;
  // Edges as normalized index pairs (first <= second), insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int v) const;
  // Distinct neighbors of v (each listed once even across parallel edges).
  std::vector<int> neighbors(int v) const;
  // Multiplicity of the (u, v) bundle; 0 when non-adjacent.
  int multiplicity(int u, int v) const;

  bool is_connected() const;

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;
};

// Witness of an isomorphism: a vertex bijection plus the parallel-edge
// bundle correspondence it induces.
struct GraphIso {
  std::map<std::string, std::string> vertex_map;
  struct Bundle {
    std::pair<std::string, std::string> from;
    std::pair<std::string, std::string> to;
    int multiplicity = 0;
  };
  std::vector<Bundle> edge_multiplicity_witness;
};

// E - V + 1 for connected graphs; throws "not connected" otherwise.
int first_betti(const Multigraph& g);

bool is_tree(const Multigraph& g);

// Deterministic witness search: iterated color refinement on
// (degree, neighbor colors, bundle multiplicities), then backtracking in
// canonical order. Exponential worst case, fine at Reeb-graph sizes.
std::optional<GraphIso> are_isomorphic(const Multigraph& g, const Multigraph& h);

// Canonical form for trees (center-rooted subtree codes): equal strings
// exactly when the trees are isomorphic. Throws on non-trees.
std::string tree_canonical_code(const Multigraph& t);

// Repeatedly suppress degree-2 vertices whose two edges lead to distinct
// neighbors, merging the edges. A pure cycle contracts to the canonical
// 2-vertex double edge. Preserves first_betti; idempotent.
Multigraph smooth_degree2(const Multigraph& g);

}  // namespace reebforge
