#pragma once
// JSON and plain-text forms of the pipeline values, for the CLI and the
// python module. Rationals travel as "p/q" strings; all emitters are
// deterministic (object keys sorted, container orders preserved). Parsers
// throw std::invalid_argument on malformed input.

#include <string>

#include "reebforge/decomp.hpp"
#include "reebforge/pipeline.hpp"

namespace reebforge {

// {"vertices":["v",...],"edges":[["u","v"],...]}; parallel edges repeat.
std::string graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const std::string& text);

// One "u v" pair per line; blank lines skipped; a lone token is an
// isolated vertex.
Multigraph graph_from_edge_list(const std::string& text);

// Accepts either form: leading '{' means JSON.
Multigraph graph_from_text(const std::string& text);

std::string decomposition_to_json(const TreeDecomposition& d);
std::string embedding_to_json(const LeveledEmbedding& e);

std::string arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const std::string& text);

std::string reeb_to_json(const ReebGraph& rg);

std::string system_to_json(const AlgebraicSystem& s);
std::string system_to_text(const AlgebraicSystem& s);

// {"global_I4_zero":bool,"sets":[{"form":"root"|"terminal"|"triple",
//  "edges":[["u","v"],...]},...]}
Thm4Selection selection_from_json(const std::string& text);

std::string validation_to_json(const ValidationReport& r);
std::string bundle_to_json(const RealizationBundle& b);

}  // namespace reebforge
