#pragma once
// Exact plane primitives for curve arrangements built from axis-parallel
// lines and circles with rational data. Any two such curves cross in points
// whose coordinates live in one quadratic extension Q(sqrt(d)), so every
// point classification this library needs reduces to QuadExt sign tests.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reebforge/quadext.hpp"
#include "reebforge/rational.hpp"

namespace reebforge {

enum class CurveShape { VLine, HLine, Circle };

// One boundary curve with its defining polynomial f:
//   VLine:  f = side * (x - c0)
//   HLine:  f = side * (y - c0)
//   Circle: f = (x - cx)^2 + (y - cy)^2 - r2
// The sign convention keeps f > 0 on the region side everywhere, so the
// region is an intersection of f > 0 half-planes and disk exteriors.
struct Curve {
  CurveShape shape = CurveShape::Circle;
  Rat c0;        // line coordinate
  int side = 1;  // lines only: +1 puts the region at larger coordinate
  Rat cx, cy, r2;
  std::optional<Rat> radius;  // set when the radius itself is rational
  int group = 0;              // 1..4
  std::string name;

  static Curve vline(const Rat& x0, int side, int group, std::string name);
  static Curve hline(const Rat& y0, int side, int group, std::string name);
  static Curve circle(const Rat& cx, const Rat& cy, const Rat& r2, int group, std::string name,
                      std::optional<Rat> radius = std::nullopt);
  bool is_circle() const { return shape == CurveShape::Circle; }
};

// A point whose coordinates share one radicand, as crossing points do.
struct CrossPoint {
  QuadExt x, y;
};

// f evaluated exactly. The QuadExt overload requires x and y to lie in a
// common quadratic extension.
Rat curve_eval(const Curve& c, const Rat& x, const Rat& y);
QuadExt curve_eval(const Curve& c, const QuadExt& x, const QuadExt& y);

// All crossing points of two distinct curves: 0, 1, or 2 of them, in
// ascending order of the coordinate that varies. One crossing point means
// tangential contact whenever a circle is involved. Parallel lines yield
// none; handing in the same curve twice throws.
std::vector<CrossPoint> curve_crossings(const Curve& a, const Curve& b);

// True when the pair meets in exactly one point with matching tangent
// directions there (circle-circle or line-circle tangency).
bool crossing_is_tangential(const Curve& a, const Curve& b);

// Leftmost and rightmost points of a circle; x = cx -+ sqrt(r2).
std::pair<CrossPoint, CrossPoint> circle_extreme_points(const Curve& c);

}  // namespace reebforge
