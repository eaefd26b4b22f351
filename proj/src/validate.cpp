// Exact validation of arrangement preconditions, plus point classification.
// Everything reduces to rational arithmetic and QuadExt sign tests; each
// failed check reports a witness.

#include <sstream>
#include <vector>

#include "reebforge/arrangement.hpp"

namespace reebforge {

namespace {

std::string rat_str(const Rat& r) { return rat_to_string(r); }

std::string point_str(const QuadExt& x, const QuadExt& y) {
  std::ostringstream os;
  os << "(" << x.to_string() << ", " << y.to_string() << ")";
  return os.str();
}

}  // namespace

bool in_open_region(const Arrangement& a, const Rat& x, const Rat& y) {
  for (const Curve& c : a.curves)
    if (curve_eval(c, x, y) <= 0) return false;
  return true;
}

bool in_closed_region(const Arrangement& a, const QuadExt& x, const QuadExt& y) {
  for (const Curve& c : a.curves)
    if (sign(curve_eval(c, x, y)) < 0) return false;
  return true;
}

PointClassification classify_point(const Arrangement& a, const Rat& x, const Rat& y) {
  PointClassification out;
  for (int i = 0; i < static_cast<int>(a.curves.size()); ++i) {
    int s = sgn(curve_eval(a.curves[i], x, y));
    if (s < 0) {
      out.cls = PointClass::Outside;
      out.on_curves.clear();
      out.fiber = "empty";
      return out;
    }
    if (s == 0) out.on_curves.push_back(i);
  }
  switch (out.on_curves.size()) {
    case 0:
      out.cls = PointClass::Interior;
      break;
    case 1:
      out.cls = PointClass::OneWall;
      break;
    case 2:
      out.cls = PointClass::Corner;
      break;
    default:
      throw std::runtime_error("classify_point: point lies on 3+ curves");
  }
  // Local fiber: one sphere factor per nonempty group; a group whose
  // polynomial vanishes at the point contributes a disk factor D^{I+1}
  // instead (the normal model of the wall).
  std::vector<bool> group_present(5, false), group_zero(5, false);
  for (const Curve& c : a.curves) group_present[c.group] = true;
  for (int i : out.on_curves) group_zero[a.curves[i].group] = true;
  std::string fiber;
  for (int g = 1; g <= 4; ++g) {
    if (!group_present[g]) continue;
    if (!fiber.empty()) fiber += " x ";
    int ig = a.exponent_of_group(g);
    fiber += group_zero[g] ? "D^" + std::to_string(ig + 1) : "S^" + std::to_string(ig);
  }
  out.fiber = fiber;
  return out;
}

ValidationReport validate_preconditions(const Arrangement& a) {
  ValidationReport rep;
  auto fail = [&](const std::string& check, const std::string& detail) {
    rep.issues.push_back({check, detail});
  };

  if (!(a.X1 < a.X2) || !(a.Y1 < a.Y2))
    fail("bounds", "wall coordinates not ordered: X " + rat_str(a.X1) + ".." + rat_str(a.X2) +
                       ", Y " + rat_str(a.Y1) + ".." + rat_str(a.Y2));

  // Walls: the first four curves, inward-oriented, matching the bounds.
  bool walls_ok = a.curves.size() >= 4;
  if (walls_ok) {
    const Curve &s1 = a.curves[0], &s2 = a.curves[1], &s3 = a.curves[2], &s4 = a.curves[3];
    walls_ok = s1.shape == CurveShape::VLine && s1.c0 == a.X1 && s1.side == 1 && s1.group == 1 &&
               s2.shape == CurveShape::VLine && s2.c0 == a.X2 && s2.side == -1 && s2.group == 1 &&
               s3.shape == CurveShape::HLine && s3.c0 == a.Y1 && s3.side == 1 && s3.group == 2 &&
               s4.shape == CurveShape::HLine && s4.c0 == a.Y2 && s4.side == -1 && s4.group == 2;
  }
  if (!walls_ok) fail("walls", "curves 0..3 are not the four inward-oriented walls");
  for (size_t i = 4; i < a.curves.size(); ++i)
    if (!a.curves[i].is_circle() || (a.curves[i].group != 3 && a.curves[i].group != 4))
      fail("walls", "curve " + a.curves[i].name + " is neither wall nor group-3/4 circle");

  for (int g = 1; g <= 3; ++g)
    if (a.exponent_of_group(g) < 1)
      fail("exponents", "group " + std::to_string(g) + " needs exponent >= 1");
  if (a.exponent_of_group(4) < 0) fail("exponents", "group 4 exponent negative");

  if (!in_open_region(a, a.region_seed.first, a.region_seed.second))
    fail("seed-interior", "seed (" + rat_str(a.region_seed.first) + ", " +
                              rat_str(a.region_seed.second) + ") is not interior");

  int n = static_cast<int>(a.curves.size());

  // Collect all in-region crossings once; several checks reuse them.
  struct Hit {
    int i, j;
    CrossPoint p;
  };
  std::vector<Hit> hits;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<CrossPoint> cps;
      try {
        cps = curve_crossings(a.curves[i], a.curves[j]);
      } catch (const std::invalid_argument&) {
        fail("same-group-disjoint", "curves " + a.curves[i].name + " and " + a.curves[j].name +
                                        " coincide");
        continue;
      }
      bool tangential = cps.size() == 1 && (a.curves[i].is_circle() || a.curves[j].is_circle());
      for (const CrossPoint& cp : cps) {
        if (!in_closed_region(a, cp.x, cp.y)) continue;
        hits.push_back({i, j, cp});
        if (tangential)
          fail("transversal", "tangential contact of " + a.curves[i].name + " and " +
                                  a.curves[j].name + " at " + point_str(cp.x, cp.y) +
                                  " lies in the region");
        if (a.curves[i].group == a.curves[j].group)
          fail("same-group-disjoint", a.curves[i].name + " and " + a.curves[j].name +
                                          " (group " + std::to_string(a.curves[i].group) +
                                          ") meet at " + point_str(cp.x, cp.y));
        if (!cp.x.is_rational())
          fail("rational-events", "crossing of " + a.curves[i].name + " and " + a.curves[j].name +
                                      " at irrational column " + cp.x.to_string());
      }
    }
  }

  // Triple points: two hits at one location involving 3+ distinct curves.
  for (size_t p = 0; p < hits.size(); ++p) {
    for (size_t q = p + 1; q < hits.size(); ++q) {
      if (compare(hits[p].p.x, hits[q].p.x) != 0 || compare(hits[p].p.y, hits[q].p.y) != 0)
        continue;
      fail("no-triple-point",
           "curves " + a.curves[hits[p].i].name + "," + a.curves[hits[p].j].name + "," +
               a.curves[hits[q].i].name + "," + a.curves[hits[q].j].name + " share point " +
               point_str(hits[p].p.x, hits[p].p.y));
    }
  }

  // Circles must touch the region; their in-region extremes must have
  // rational x (true automatically when the radius is rational).
  for (int i = 0; i < n; ++i) {
    const Curve& c = a.curves[i];
    if (!c.is_circle()) continue;
    bool meets = false;
    for (const Hit& h : hits)
      if (h.i == i || h.j == i) meets = true;
    auto [le, re] = circle_extreme_points(c);
    for (const CrossPoint* e : {&le, &re}) {
      if (!in_closed_region(a, e->x, e->y)) continue;
      meets = true;
      if (!e->x.is_rational())
        fail("rational-events",
             "extreme of " + c.name + " at irrational column " + e->x.to_string());
    }
    if (!meets) fail("curve-meets-region", c.name + " never touches the closed region");
  }

  // Markers: exactly two in-region crossings with lines and splitters.
  for (int i = 0; i < n; ++i) {
    if (a.curves[i].group != 4) continue;
    int count = 0;
    for (const Hit& h : hits) {
      int other = h.i == i ? h.j : (h.j == i ? h.i : -1);
      if (other >= 0 && a.curves[other].group != 4) ++count;
    }
    if (count != 2)
      fail("marker-two-point", a.curves[i].name + " crosses lines+splitters in " +
                                   std::to_string(count) + " region points (want 2)");
  }

  return rep;
}

}  // namespace reebforge
