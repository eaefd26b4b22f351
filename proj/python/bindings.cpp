// Python bindings: every structured value crosses the boundary as a JSON
// string (the same schemas the CLI reads and writes); the package wrapper
// turns them into dicts. Errors surface as ValueError (parse problems) or
// RuntimeError (pipeline stage failures).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "reebforge/decomp.hpp"
#include "reebforge/enumerate.hpp"
#include "reebforge/grid_oracle.hpp"
#include "reebforge/json_io.hpp"
#include "reebforge/svg.hpp"

namespace py = pybind11;
using namespace reebforge;

namespace {

std::array<int, 4> exps_of(const std::vector<int>& v, int def4) {
  if (v.empty()) return {1, 1, 1, def4};
  if (v.size() != 4) throw std::invalid_argument("exponents need exactly four integers");
  return {v[0], v[1], v[2], v[3]};
}

RealizationBundle bundle_for(const std::string& graph_text, const std::string& selection_json,
                             const std::vector<int>& exponents, int resolution) {
  Multigraph g = graph_from_text(graph_text);
  if (selection_json.empty()) return realize_tree(g, exps_of(exponents, 1), resolution);
  return realize_cactus(g, selection_from_json(selection_json), exps_of(exponents, 0),
                        resolution);
}

}  // namespace

PYBIND11_MODULE(_reebforge, m) {
  m.doc() = "tree and cactus realization toolkit (JSON-string core API)";

  m.def(
      "decompose",
      [](const std::string& graph) {
        return decomposition_to_json(tree_decomposition(graph_from_text(graph)));
      },
      py::arg("graph"), "Bridge/bridgeless tree decomposition of a connected multigraph.");

  m.def(
      "level",
      [](const std::string& graph, const std::string& root) {
        return embedding_to_json(level_tree(graph_from_text(graph), root));
      },
      py::arg("graph"), py::arg("root") = "", "Leveled embedding of a tree.");

  m.def(
      "realize_tree",
      [](const std::string& graph, const std::vector<int>& exponents, int resolution) {
        return bundle_to_json(realize_tree(graph_from_text(graph), exps_of(exponents, 1),
                                           resolution));
      },
      py::arg("graph"), py::arg("exponents") = std::vector<int>{}, py::arg("resolution") = 128,
      "Full certified realization of a tree as a Reeb graph.");

  m.def(
      "realize_cactus",
      [](const std::string& graph, const std::string& selection,
         const std::vector<int>& exponents, int resolution) {
        return bundle_to_json(realize_cactus(graph_from_text(graph),
                                             selection_from_json(selection),
                                             exps_of(exponents, 0), resolution));
      },
      py::arg("graph"), py::arg("selection"), py::arg("exponents") = std::vector<int>{},
      py::arg("resolution") = 128,
      "Sheeted realization driven by an omission selection; divergences from the rewritten "
      "prediction are reported in the certificate rather than raised.");

  m.def(
      "sweep",
      [](const std::string& arrangement) {
        return reeb_to_json(sweep_reeb(arrangement_from_json(arrangement)));
      },
      py::arg("arrangement"), "Exact sweep of an arrangement's Reeb graph.");

  m.def(
      "validate",
      [](const std::string& arrangement) {
        return validation_to_json(validate_preconditions(arrangement_from_json(arrangement)));
      },
      py::arg("arrangement"), "Arrangement precondition report.");

  m.def(
      "emit_system",
      [](const std::string& arrangement) {
        return system_to_json(emit_algebraic_system(arrangement_from_json(arrangement)));
      },
      py::arg("arrangement"), "Defining polynomial system of an arrangement.");

  m.def(
      "system_text",
      [](const std::string& arrangement) {
        return system_to_text(emit_algebraic_system(arrangement_from_json(arrangement)));
      },
      py::arg("arrangement"), "Human-readable equations of an arrangement's system.");

  m.def(
      "grid_oracle",
      [](const std::string& arrangement, int resolution) {
        return graph_to_json(grid_oracle_reeb(arrangement_from_json(arrangement), resolution));
      },
      py::arg("arrangement"), py::arg("resolution") = 128,
      "Raster Reeb graph of an arrangement (independent oracle).");

  m.def(
      "render",
      [](const std::string& graph, const std::string& selection,
         const std::vector<int>& exponents, int resolution) {
        return render_svg(bundle_for(graph, selection, exponents, resolution));
      },
      py::arg("graph"), py::arg("selection") = "", py::arg("exponents") = std::vector<int>{},
      py::arg("resolution") = 128, "SVG of the input tree, the realized region, and the Reeb graph.");

  m.def(
      "enumerate_trees",
      [](int n) {
        std::vector<std::string> out;
        for (const Multigraph& t : enumerate_trees(n)) out.push_back(graph_to_json(t));
        return out;
      },
      py::arg("n"), "One JSON graph per isomorphism class of trees on n vertices.");

  m.def(
      "are_isomorphic",
      [](const std::string& a, const std::string& b) {
        return are_isomorphic(graph_from_text(a), graph_from_text(b)).has_value();
      },
      py::arg("a"), py::arg("b"), "Multigraph isomorphism test.");
}
