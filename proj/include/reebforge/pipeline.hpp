#pragma once
// End-to-end realizers. A tree goes in; out comes the leveled drawing, the
// exact region, its defining polynomial system, the swept Reeb graph, and a
// certificate tying them together: the validator report, an isomorphism
// witness (against the input tree, or against the rewritten expectation in
// sheeted mode), a numeric rank spot-check of the smoothness claim, and a
// raster cross-check of the sweep.
//
// Sheeted mode (group-4 exponent 0) realizes cactus graphs: each omission
// set leaves its designated edge without a marker, so the two sheets stay
// separate over that edge's span. When the span is interior the sheets
// split and remerge — a cycle; when it reaches a wall they end in separate
// leaves instead, which is recorded as a divergence from the rewritten
// expectation rather than asserted away.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reebforge/algebraic.hpp"
#include "reebforge/arrangement.hpp"
#include "reebforge/graph.hpp"
#include "reebforge/leveling.hpp"
#include "reebforge/sweep.hpp"

namespace reebforge {

// A marker-omission set names 2..3 tree edges at consecutive parent levels:
//   Root      {level-1 edge, level-2 edge}            -> designated level-1
//   Terminal  {level-(L-2) edge, level-(L-1) edge}    -> designated deeper
//   Triple    {levels a, a+1, a+2}, a+2 <= L-1        -> designated middle
// Only the designated edge's marker is actually omitted; the other members
// fix the set's shape. Every member must be coverable in the first place
// (not a middle child of a branch vertex).
enum class OmissionForm { Root, Terminal, Triple };

struct OmissionSet {
  OmissionForm form = OmissionForm::Triple;
  std::vector<std::pair<std::string, std::string>> edges;  // (parent, child)
};

struct Thm4Selection {
  std::vector<OmissionSet> sets;
  bool global_I4_zero = true;  // false: plain tree realization, sets must be empty
};

// Shape, disjointness, and choosability problems; empty = valid. Edges may
// be given in either orientation; levels are read from the embedding.
std::vector<std::string> validate_selection(const LeveledEmbedding& e, const Thm4Selection& sel);

// The designated edge of each set, normalized to (parent, child).
CycleSelection designated_edges(const LeveledEmbedding& e, const Thm4Selection& sel);

// The sheeted-mode prediction: the input tree with every structurally
// uncoverable edge doubled and each set's designated edge doubled. With
// global_I4_zero false the tree is returned unchanged (sets must be empty).
// Throws std::invalid_argument on malformed selections.
Multigraph expected_graph_thm4(const Multigraph& t, const Thm4Selection& sel);

// A stage failure, carrying which stage refused. Stages: "input",
// "selection", "level", "arrange", "validate", "emit", "sweep", "verify"
// (isomorphism mismatch on a tree), "oracle" (raster disagrees with the
// sweep at the requested and the doubled resolution).
struct PipelineError : std::runtime_error {
  std::string stage;
  PipelineError(std::string st, const std::string& what)
      : std::runtime_error(st + ": " + what), stage(std::move(st)) {}
};

struct RealizationCertificate {
  ValidationReport validator;
  // Witness between computed_reeb.skeleton and the comparison target: the
  // input tree for realize_tree, expected_graph_thm4 for realize_cactus.
  std::optional<GraphIso> isomorphism;
  std::string mismatch;  // filled when no witness
  JacobianReport jacobian;
  bool oracle_consistent = false;
  int oracle_resolution = 0;  // resolution that agreed (may be the retry)
  std::vector<std::string> divergences;  // sheeted-mode conformance records
};

struct RealizationBundle {
  Multigraph input_graph;
  LeveledEmbedding embedding;
  Arrangement arrangement;
  AlgebraicSystem system;
  ReebGraph computed_reeb;
  RealizationCertificate certificate;
};

// Realizes a tree with all-positive exponents. The certificate always holds
// a witness: a missing isomorphism is a hard PipelineError("verify"), and a
// raster/sweep disagreement surviving one retry at doubled resolution is a
// hard PipelineError("oracle").
RealizationBundle realize_tree(const Multigraph& t,
                               const std::array<int, 4>& exponents = {1, 1, 1, 1},
                               int oracle_resolution = 128);

// Sheeted realization per the selection. Mismatch against the expectation is
// recorded as a divergence, not an error; raster/sweep agreement stays hard.
// With global_I4_zero false (empty selection, positive exponents) this is
// exactly realize_tree.
RealizationBundle realize_cactus(const Multigraph& t, const Thm4Selection& sel,
                                 const std::array<int, 4>& exponents = {1, 1, 1, 0},
                                 int oracle_resolution = 128);

}  // namespace reebforge
