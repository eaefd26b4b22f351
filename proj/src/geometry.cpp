#include "reebforge/geometry.hpp"

#include <stdexcept>

namespace reebforge {

Curve Curve::vline(const Rat& x0, int side, int group, std::string name) {
  Curve c;
  c.shape = CurveShape::VLine;
  c.c0 = x0;
  c.side = side;
  c.group = group;
  c.name = std::move(name);
  return c;
}

Curve Curve::hline(const Rat& y0, int side, int group, std::string name) {
  Curve c;
  c.shape = CurveShape::HLine;
  c.c0 = y0;
  c.side = side;
  c.group = group;
  c.name = std::move(name);
  return c;
}

Curve Curve::circle(const Rat& cx, const Rat& cy, const Rat& r2, int group, std::string name,
                    std::optional<Rat> radius) {
  if (r2 <= 0) throw std::invalid_argument("circle needs positive squared radius");
  Curve c;
  c.shape = CurveShape::Circle;
  c.cx = cx;
  c.cy = cy;
  c.r2 = r2;
  c.radius = std::move(radius);
  c.group = group;
  c.name = std::move(name);
  return c;
}

Rat curve_eval(const Curve& c, const Rat& x, const Rat& y) {
  switch (c.shape) {
    case CurveShape::VLine:
      return Rat(c.side) * (x - c.c0);
    case CurveShape::HLine:
      return Rat(c.side) * (y - c.c0);
    case CurveShape::Circle:
      return (x - c.cx) * (x - c.cx) + (y - c.cy) * (y - c.cy) - c.r2;
  }
  throw std::logic_error("unreachable");
}

QuadExt curve_eval(const Curve& c, const QuadExt& x, const QuadExt& y) {
  switch (c.shape) {
    case CurveShape::VLine:
      return Rat(c.side) * (x - c.c0);
    case CurveShape::HLine:
      return Rat(c.side) * (y - c.c0);
    case CurveShape::Circle: {
      QuadExt dx = x - c.cx;
      QuadExt dy = y - c.cy;
      return field_add(field_mul(dx, dx), field_mul(dy, dy)) - c.r2;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Roots of p t^2 + q t + s = 0 (p != 0), ascending.
std::vector<QuadExt> solve_quadratic(const Rat& p, const Rat& q, const Rat& s) {
  Rat disc = q * q - 4 * p * s;
  int sd = sgn(disc);
  if (sd < 0) return {};
  Rat mid = -q / (2 * p);
  if (sd == 0) return {QuadExt(mid)};
  Rat half = abs(Rat(1) / (2 * p));
  return {QuadExt(mid, -half, disc), QuadExt(mid, half, disc)};
}

// Crossings of a vertical line x = x0 with a circle, ascending in y.
std::vector<CrossPoint> vline_circle(const Rat& x0, const Curve& c) {
  Rat disc = c.r2 - (x0 - c.cx) * (x0 - c.cx);
  int sd = sgn(disc);
  if (sd < 0) return {};
  if (sd == 0) return {{QuadExt(x0), QuadExt(c.cy)}};
  return {{QuadExt(x0), QuadExt(c.cy, Rat(-1), disc)}, {QuadExt(x0), QuadExt(c.cy, Rat(1), disc)}};
}

std::vector<CrossPoint> hline_circle(const Rat& y0, const Curve& c) {
  Rat disc = c.r2 - (y0 - c.cy) * (y0 - c.cy);
  int sd = sgn(disc);
  if (sd < 0) return {};
  if (sd == 0) return {{QuadExt(c.cx), QuadExt(y0)}};
  return {{QuadExt(c.cx, Rat(-1), disc), QuadExt(y0)}, {QuadExt(c.cx, Rat(1), disc), QuadExt(y0)}};
}

std::vector<CrossPoint> circle_circle(const Curve& c1, const Curve& c2) {
  Rat k1 = c1.cx * c1.cx + c1.cy * c1.cy - c1.r2;
  Rat k2 = c2.cx * c2.cx + c2.cy * c2.cy - c2.r2;
  // Radical line A x + B y = D, containing every common point.
  Rat A = 2 * (c2.cx - c1.cx);
  Rat B = 2 * (c2.cy - c1.cy);
  Rat D = k2 - k1;
  if (A == 0 && B == 0) {
    if (c1.r2 == c2.r2) throw std::invalid_argument("curve_crossings: identical circles");
    return {};  // concentric
  }
  if (B == 0) {
    Rat x0 = D / A;
    return vline_circle(x0, c1);
  }
  Rat E = D - B * c1.cy;
  Rat p = A * A + B * B;
  Rat q = -2 * (B * B * c1.cx + A * E);
  Rat s = B * B * c1.cx * c1.cx + E * E - B * B * c1.r2;
  std::vector<CrossPoint> out;
  for (const QuadExt& x : solve_quadratic(p, q, s)) {
    QuadExt y = field_add(QuadExt(D / B), (-A / B) * x);
    out.push_back({x, y});
  }
  return out;
}

}  // namespace

std::vector<CrossPoint> curve_crossings(const Curve& a, const Curve& b) {
  if (a.shape == CurveShape::VLine && b.shape == CurveShape::VLine) {
    if (a.c0 == b.c0) throw std::invalid_argument("curve_crossings: identical lines");
    return {};
  }
  if (a.shape == CurveShape::HLine && b.shape == CurveShape::HLine) {
    if (a.c0 == b.c0) throw std::invalid_argument("curve_crossings: identical lines");
    return {};
  }
  if (a.shape == CurveShape::VLine && b.shape == CurveShape::HLine)
    return {{QuadExt(a.c0), QuadExt(b.c0)}};
  if (a.shape == CurveShape::HLine && b.shape == CurveShape::VLine)
    return {{QuadExt(b.c0), QuadExt(a.c0)}};
  if (a.shape == CurveShape::VLine && b.is_circle()) return vline_circle(a.c0, b);
  if (a.is_circle() && b.shape == CurveShape::VLine) return vline_circle(b.c0, a);
  if (a.shape == CurveShape::HLine && b.is_circle()) return hline_circle(a.c0, b);
  if (a.is_circle() && b.shape == CurveShape::HLine) return hline_circle(b.c0, a);
  return circle_circle(a, b);
}

bool crossing_is_tangential(const Curve& a, const Curve& b) {
  if (!a.is_circle() && !b.is_circle()) return false;
  return curve_crossings(a, b).size() == 1;
}

std::pair<CrossPoint, CrossPoint> circle_extreme_points(const Curve& c) {
  if (!c.is_circle()) throw std::invalid_argument("circle_extreme_points: not a circle");
  CrossPoint left{QuadExt(c.cx, Rat(-1), c.r2), QuadExt(c.cy)};
  CrossPoint right{QuadExt(c.cx, Rat(1), c.r2), QuadExt(c.cy)};
  return {left, right};
}

}  // namespace reebforge
