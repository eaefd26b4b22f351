// Marker circles ("bites"). Every marker is a disk that overlaps the region
// in a single lens attached to a host curve, so its two boundary crossings
// are the only events it contributes. Construction is a tuning loop: each
// candidate circle has rational center and squared radius, and is accepted
// only after exact checks that
//   - its crossings with every other curve inside the closed region are
//     exactly the prescribed corner/wall points,
//   - its own leftmost/rightmost points stay outside the closed region (so
//     it never adds an irrational event column),
//   - it genuinely protrudes past its host into the band at a probe column.

#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "marker_builder.hpp"

namespace reebforge::detail {

namespace {

// x(t) = X2 - rho (1-t^2)/(1+t^2) walks the circle's rational points from
// its left tip (t = 0) to the wall (t = 1), increasing in t.
Rat param_x(const Rat& X2, const Rat& rho, const Rat& t) {
  return X2 - rho * (1 - t * t) / (1 + t * t);
}

Rat param_offset(const Rat& rho, const Rat& t) { return rho * 2 * t / (1 + t * t); }

}  // namespace

std::optional<HostPoint> splitter_point_near(const Rat& X2, const Rat& rho, const Rat& target) {
  Rat lo_x = target - Rat(1, 4), hi_x = target + Rat(1, 4);
  if (X2 - rho >= lo_x || X2 <= hi_x) return std::nullopt;  // window must straddle the arc
  Rat lo(0), hi(1);
  for (int it = 0; it < 64; ++it) {
    Rat t = (lo + hi) / 2;
    Rat x = param_x(X2, rho, t);
    if (x <= lo_x)
      lo = t;
    else if (x >= hi_x)
      hi = t;
    else
      return HostPoint{x, param_offset(rho, t)};
  }
  return std::nullopt;
}

std::optional<std::pair<HostPoint, HostPoint>> splitter_point_near2(const Rat& X2,
                                                                    const Rat& rho_a,
                                                                    const Rat& rho_b,
                                                                    const Rat& target) {
  if (rho_a == rho_b) {
    auto p = splitter_point_near(X2, rho_a, target);
    if (!p) return std::nullopt;
    return std::make_pair(*p, *p);
  }
  Rat lo_x = target - Rat(1, 4), hi_x = target + Rat(1, 4);
  // Rational points of both circles at one column form an elliptic
  // condition, so only a bounded search is worthwhile.
  for (int q = 2; q <= 64; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rat t(p, q);
      Rat x = param_x(X2, rho_a, t);
      if (x <= lo_x || x >= hi_x) continue;
      Rat rad_b = rho_b * rho_b - (X2 - x) * (X2 - x);
      if (rad_b <= 0) continue;
      auto sb = rat_sqrt(rad_b);
      if (!sb) continue;
      return std::make_pair(HostPoint{x, param_offset(rho_a, t)}, HostPoint{x, *sb});
    }
  }
  return std::nullopt;
}

namespace {

// Every crossing of curve ci that lies in the closed region must be one of
// the prescribed (other-curve, x, y) points; ci's extremes must be outside;
// at probe_x the candidate's band-side boundary must lie beyond the host's.
bool admissible(const Arrangement& a, int ci,
                const std::vector<std::tuple<int, Rat, Rat>>& prescribed, const Rat& probe_x,
                int host, bool band_above) {
  const Curve& cand = a.curves[ci];
  for (const auto& [j, px, py] : prescribed)
    if (!in_closed_region(a, QuadExt(px), QuadExt(py))) return false;
  for (int j = 0; j < static_cast<int>(a.curves.size()); ++j) {
    if (j == ci) continue;
    for (const CrossPoint& cp : curve_crossings(cand, a.curves[j])) {
      if (!in_closed_region(a, cp.x, cp.y)) continue;
      bool ok = false;
      for (const auto& [pj, px, py] : prescribed)
        if (pj == j && compare(cp.x, QuadExt(px)) == 0 && compare(cp.y, QuadExt(py)) == 0) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  }
  auto [lext, rext] = circle_extreme_points(cand);
  if (in_closed_region(a, lext.x, lext.y)) return false;
  if (in_closed_region(a, rext.x, rext.y)) return false;

  Rat disc_c = cand.r2 - (probe_x - cand.cx) * (probe_x - cand.cx);
  if (disc_c <= 0) return false;
  QuadExt yc(cand.cy, Rat(band_above ? 1 : -1), disc_c);
  const Curve& h = a.curves[host];
  QuadExt yh;
  if (h.is_circle()) {
    Rat disc_h = h.r2 - (probe_x - h.cx) * (probe_x - h.cx);
    if (disc_h <= 0) return false;
    yh = QuadExt(h.cy, Rat(band_above ? 1 : -1), disc_h);
  } else {
    yh = QuadExt(h.c0);
  }
  return band_above ? compare(yc, yh) > 0 : compare(yc, yh) < 0;
}

std::string next_marker_name(const Arrangement& a) {
  int n = 0;
  for (const Curve& c : a.curves)
    if (c.group == 4) ++n;
  return "marker" + std::to_string(n);
}

bool try_accept(Arrangement& a, BiteSpec& spec, Curve cand,
                const std::vector<std::tuple<int, Rat, Rat>>& prescribed, const Rat& probe_x,
                const std::vector<std::pair<Rat, Rat>>& swallowed) {
  for (const auto& [sx, sy] : swallowed)
    if (curve_eval(cand, sx, sy) >= 0) return false;
  a.curves.push_back(std::move(cand));
  int ci = static_cast<int>(a.curves.size()) - 1;
  if (admissible(a, ci, prescribed, probe_x, spec.host, spec.band_above)) {
    spec.curve = ci;
    return true;
  }
  a.curves.pop_back();
  return false;
}

// Chord bite on a line host: center across the line from the band, so the
// lens between the corner columns is the disk's only region overlap.
bool bite_line_chord(Arrangement& a, BiteSpec& spec, const BiteGeometry& g) {
  const Curve host = a.curves[spec.host];
  Rat xa = g.left_corner->first, xb = g.right_corner->first, Y = host.c0;
  Rat w = (xb - xa) / 2, mx = (xa + xb) / 2;
  std::vector<std::tuple<int, Rat, Rat>> prescribed{{spec.host, xa, Y}, {spec.host, xb, Y}};
  Rat half_w = w / 2;
  Rat h0 = Rat(1, 4) < half_w ? Rat(1, 4) : half_w;
  for (int k = 0; k < 60; ++k) {
    Rat h = h0 / Rat(Int(1) << k);
    Rat d = (w * w - h * h) / (2 * h);
    Rat qy = spec.band_above ? Rat(Y - d) : Rat(Y + d);
    Curve cand = Curve::circle(mx, qy, w * w + d * d, 4, next_marker_name(a));
    if (try_accept(a, spec, std::move(cand), prescribed, mx, {})) return true;
  }
  return false;
}

// Chord bite on a circle host: center between the chord midpoint and the
// host's center, giving a strictly smaller radius, so the candidate's arc
// between the corners bulges past the host into the band.
bool bite_circle_chord(Arrangement& a, BiteSpec& spec, const BiteGeometry& g) {
  const Curve host = a.curves[spec.host];
  auto [xa, ya] = *g.left_corner;
  auto [xb, yb] = *g.right_corner;
  Rat mx = (xa + xb) / 2, my = (ya + yb) / 2;
  std::vector<std::tuple<int, Rat, Rat>> prescribed{{spec.host, xa, ya}, {spec.host, xb, yb}};
  Rat probe = mx;
  std::vector<Rat> taus{Rat(1, 2)};
  for (int k = 2; k <= 30; ++k) {
    Rat step(Int(1), Int(1) << k);
    taus.push_back(step);
    taus.push_back(1 - step);
  }
  {
    for (const Rat& tau : taus) {
      Rat qx = mx + tau * (host.cx - mx);
      Rat qy = my + tau * (host.cy - my);
      Rat r2 = (qx - xa) * (qx - xa) + (qy - ya) * (qy - ya);
      Curve cand = Curve::circle(qx, qy, r2, 4, next_marker_name(a));
      if (try_accept(a, spec, std::move(cand), prescribed, probe, {})) return true;
    }
  }
  return false;
}

// Wall cut on a circle host: one corner on the host, one crossing on the
// wall, with the host-wall region corner swallowed by the disk.
bool bite_circle_wallcut(Arrangement& a, BiteSpec& spec, const BiteGeometry& g) {
  const Curve host = a.curves[spec.host];
  if (!host.radius) throw std::logic_error("wall-cut host circle needs a rational radius");
  auto [xa, ya] = *g.left_corner;
  Rat X2 = a.X2;
  Rat Ty = spec.band_above ? Rat(host.cy + *host.radius) : Rat(host.cy - *host.radius);
  Rat probe = (xa + X2) / 2;
  for (int k = 0; k < 12; ++k) {
    Rat delta = Rat(1, 4) / Rat(Int(1) << k);
    Rat yw = spec.band_above ? Rat(Ty + delta) : Rat(Ty - delta);
    Rat nx = -(yw - ya), ny = X2 - xa;  // perpendicular of the end chord
    Rat mx = (xa + X2) / 2, my = (ya + yw) / 2;
    std::vector<std::tuple<int, Rat, Rat>> prescribed{{spec.host, xa, ya}, {1, X2, yw}};
    // The right center displacement depends on how sharply the host arc
    // curves away, so the ladder spans several orders of magnitude.
    std::vector<Rat> taus{Rat(0)};
    for (int ex = -6; ex <= 2; ++ex) {
      Rat mag = ex < 0 ? Rat(Int(1), Int(1) << -ex) : Rat(Int(1) << ex);
      taus.push_back(-mag);  // toward the wall corner first
      taus.push_back(mag);
    }
    for (const Rat& tau : taus) {
      Rat qx = mx + tau * nx, qy = my + tau * ny;
      Rat r2 = (qx - xa) * (qx - xa) + (qy - ya) * (qy - ya);
      Curve cand = Curve::circle(qx, qy, r2, 4, next_marker_name(a));
      if (try_accept(a, spec, std::move(cand), prescribed, probe, {{X2, Ty}})) return true;
    }
  }
  return false;
}

// Wall cut on a line host: one corner on the host line, one crossing on a
// vertical wall, swallowing the rectangle corner between them. `left_wall`
// selects which wall is cut.
bool bite_line_wallcut(Arrangement& a, BiteSpec& spec, const BiteGeometry& g, bool left_wall) {
  const Curve host = a.curves[spec.host];
  Rat Y = host.c0;
  Rat xc = left_wall ? g.right_corner->first : g.left_corner->first;
  Rat wall_x = left_wall ? a.X1 : a.X2;
  int wall_idx = left_wall ? 0 : 1;
  Rat probe = (xc + wall_x) / 2;
  for (int k = 0; k < 30; ++k) {
    Rat gamma = Rat(1, 4) / Rat(Int(1) << k);
    Rat eta = Rat(1, 2) / Rat(Int(1) << k);
    Rat yw = spec.band_above ? Rat(Y + eta) : Rat(Y - eta);
    Rat qx = left_wall ? Rat((wall_x + xc) / 2 - gamma) : Rat((xc + wall_x) / 2 + gamma);
    // Equidistance from (xc, Y) and (wall_x, yw).
    Rat qy = ((Y * Y - yw * yw) - (wall_x - qx) * (wall_x - qx) + (xc - qx) * (xc - qx)) /
             (2 * (Y - yw));
    Rat r2 = (xc - qx) * (xc - qx) + (Y - qy) * (Y - qy);
    std::vector<std::tuple<int, Rat, Rat>> prescribed{{spec.host, xc, Y}, {wall_idx, wall_x, yw}};
    Curve cand = Curve::circle(qx, qy, r2, 4, next_marker_name(a));
    if (try_accept(a, spec, std::move(cand), prescribed, probe, {{wall_x, Y}})) return true;
  }
  return false;
}

// Both ends cut walls: a single flat bite hugging the host line all the way
// across (the one-edge tree under full coverage).
bool bite_double_wallcut(Arrangement& a, BiteSpec& spec) {
  const Curve host = a.curves[spec.host];
  Rat Y = host.c0;
  Rat W = (a.X2 - a.X1) / 2, qx = (a.X1 + a.X2) / 2;
  for (int k = 0; k < 30; ++k) {
    Rat eta = Rat(1, 8);
    Rat d = 4 * W * W * Rat(Int(1) << k);
    Rat ye = spec.band_above ? Rat(Y + eta) : Rat(Y - eta);
    Rat qy = spec.band_above ? Rat(ye - d) : Rat(ye + d);
    Rat r2 = W * W + d * d;
    std::vector<std::tuple<int, Rat, Rat>> prescribed{{0, a.X1, ye}, {1, a.X2, ye}};
    Curve cand = Curve::circle(qx, qy, r2, 4, next_marker_name(a));
    if (try_accept(a, spec, std::move(cand), prescribed, qx, {{a.X1, Y}, {a.X2, Y}})) return true;
  }
  return false;
}

}  // namespace

bool build_bite(Arrangement& a, BiteSpec& spec, const BiteGeometry& g) {
  const Curve& host = a.curves[spec.host];
  bool lw = !g.left_corner.has_value(), rw = !g.right_corner.has_value();
  if (host.is_circle()) {
    if (!lw && !rw) return bite_circle_chord(a, spec, g);
    if (!lw && rw) return bite_circle_wallcut(a, spec, g);
    throw std::logic_error("unsupported bite form on a circle host");
  }
  if (!lw && !rw) return bite_line_chord(a, spec, g);
  if (lw && rw) return bite_double_wallcut(a, spec);
  return bite_line_wallcut(a, spec, g, lw);
}

}  // namespace reebforge::detail
