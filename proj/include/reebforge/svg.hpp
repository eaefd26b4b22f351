#pragma once
// Deterministic SVG renders. Color scheme: bounding walls blue, splitter
// circles red, marker circles green — one colored element per curve, so
// color counts equal curve group sizes.

#include <string>

#include "reebforge/pipeline.hpp"

namespace reebforge {

// The region alone; with a Reeb graph, the quotient is drawn beside it.
std::string render_region_svg(const Arrangement& a, const ReebGraph* reeb = nullptr);

// Leveled tree, region, and computed Reeb graph side by side.
std::string render_svg(const RealizationBundle& b);

}  // namespace reebforge
