#pragma once
// Internal: marker-circle construction, shared between arrangement.cpp
// (which plans the bites) and markers.cpp (which realizes them).

#include <optional>
#include <utility>

#include "reebforge/arrangement.hpp"

namespace reebforge::detail {

// A rational point of a circle with rational radius rho centered on the
// wall x = X2, with x-coordinate inside (target - 1/4, target + 1/4).
// The point is (column, center_y +- offset) for either sign of the offset.
struct HostPoint {
  Rat column;
  Rat offset;
};
std::optional<HostPoint> splitter_point_near(const Rat& X2, const Rat& rho, const Rat& target);

// Common column admitting rational points on two such circles of distinct
// radii at once. A bounded search; usually impossible (the condition is a
// rational point on an elliptic curve), so callers need a fallback.
std::optional<std::pair<HostPoint, HostPoint>> splitter_point_near2(const Rat& X2,
                                                                    const Rat& rho_a,
                                                                    const Rat& rho_b,
                                                                    const Rat& target);

// Concrete endpoints for one bite: corner points on the host curve, or
// nullopt where the spec says wall cut.
struct BiteGeometry {
  std::optional<std::pair<Rat, Rat>> left_corner;
  std::optional<std::pair<Rat, Rat>> right_corner;
};

// Builds the marker circle for `spec`, appends it to a.curves and records
// the index in spec.curve. Every candidate is checked exactly: prescribed
// crossings only, extremes outside the closed region, protrusion on the
// band side. Returns false when the tuning budget runs out.
bool build_bite(Arrangement& a, BiteSpec& spec, const BiteGeometry& g);

}  // namespace reebforge::detail
