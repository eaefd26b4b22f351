#include "reebforge/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace reebforge {

namespace {

void add_term(Poly2& p, int i, int j, const Rat& c) {
  auto it = p.find({i, j});
  if (it == p.end()) {
    if (c != 0) p[{i, j}] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) p.erase(it);
}

}  // namespace

Poly2 poly_of_curve(const Curve& c) {
  Poly2 p;
  switch (c.shape) {
    case CurveShape::VLine:
      add_term(p, 1, 0, Rat(c.side));
      add_term(p, 0, 0, -Rat(c.side) * c.c0);
      break;
    case CurveShape::HLine:
      add_term(p, 0, 1, Rat(c.side));
      add_term(p, 0, 0, -Rat(c.side) * c.c0);
      break;
    case CurveShape::Circle:
      // (x1-cx)^2 + (x2-cy)^2 - r2: positive outside the excluded disk.
      add_term(p, 2, 0, Rat(1));
      add_term(p, 0, 2, Rat(1));
      add_term(p, 1, 0, -2 * c.cx);
      add_term(p, 0, 1, -2 * c.cy);
      add_term(p, 0, 0, c.cx * c.cx + c.cy * c.cy - c.r2);
      break;
  }
  return p;
}

Poly2 poly_mul(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b)
      add_term(r, da.first + db.first, da.second + db.second, ca * cb);
  return r;
}

Poly2 poly_diff(const Poly2& p, int var) {
  Poly2 r;
  for (const auto& [d, c] : p) {
    int e = var == 0 ? d.first : d.second;
    if (e == 0) continue;
    if (var == 0)
      add_term(r, d.first - 1, d.second, c * e);
    else
      add_term(r, d.first, d.second - 1, c * e);
  }
  return r;
}

Rat poly_eval(const Poly2& p, const Rat& x1, const Rat& x2) {
  Rat acc(0);
  for (const auto& [d, c] : p) {
    Rat t = c;
    for (int i = 0; i < d.first; ++i) t *= x1;
    for (int j = 0; j < d.second; ++j) t *= x2;
    acc += t;
  }
  return acc;
}

double poly_eval(const Poly2& p, double x1, double x2) {
  double acc = 0;
  for (const auto& [d, c] : p)
    acc += c.get_d() * std::pow(x1, d.first) * std::pow(x2, d.second);
  return acc;
}

std::string poly_to_string(const Poly2& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads like a handwritten polynomial.
  std::vector<std::pair<std::pair<int, int>, Rat>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  for (const auto& [d, c] : terms) {
    Rat coeff = c;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool has_var = d.first > 0 || d.second > 0;
    if (!has_var || coeff != 1) os << coeff.get_str();
    if (has_var && coeff != 1) os << "*";
    if (d.first > 0) {
      os << "x1";
      if (d.first > 1) os << "^" << d.first;
    }
    if (d.first > 0 && d.second > 0) os << "*";
    if (d.second > 0) {
      os << "x2";
      if (d.second > 1) os << "^" << d.second;
    }
  }
  return os.str();
}

AlgebraicSystem emit_algebraic_system(const Arrangement& a) {
  AlgebraicSystem s;
  s.curves = a.curves;
  int y_count = 0;
  for (int g = 1; g <= 4; ++g) {
    GroupEquation eq;
    eq.group = g;
    eq.exponent = a.exponent_of_group(g);
    eq.y_offset = y_count;
    Poly2 prod{{{0, 0}, Rat(1)}};
    for (int i = 0; i < static_cast<int>(a.curves.size()); ++i) {
      if (a.curves[i].group != g) continue;
      eq.curve_indices.push_back(i);
      prod = poly_mul(prod, poly_of_curve(a.curves[i]));
    }
    if (eq.curve_indices.empty()) continue;  // no curves, no equation
    if (eq.exponent < 0) throw std::invalid_argument("negative exponent in group " +
                                                     std::to_string(g));
    eq.product = std::move(prod);
    y_count += eq.exponent + 1;
    s.manifold_dimension += eq.exponent;
    s.equations.push_back(std::move(eq));
  }
  s.ambient_dimension = 2 + y_count;
  return s;
}

std::vector<double> system_residuals(const AlgebraicSystem& s, const std::vector<double>& pt) {
  if (static_cast<int>(pt.size()) != s.ambient_dimension)
    throw std::invalid_argument("ambient point has wrong dimension");
  std::vector<double> res;
  for (const GroupEquation& eq : s.equations) {
    // Evaluate the group product factor by factor: the expanded polynomial
    // cancels catastrophically at high degree, the quadratic factors do not.
    double prod = 1;
    for (int i : eq.curve_indices) prod *= poly_eval(poly_of_curve(s.curves[i]), pt[0], pt[1]);
    double v = prod;
    for (int k = 0; k <= eq.exponent; ++k) {
      double y = pt[2 + eq.y_offset + k];
      v -= y * y;
    }
    // Scaled residual: relative to the product once it exceeds 1, absolute
    // near the zero set. Group products reach 1e7 and beyond on large
    // regions, where an absolute measure would only report double rounding.
    res.push_back(v / std::max(1.0, std::abs(prod)));
  }
  return res;
}

std::vector<double> lift_point(const AlgebraicSystem& s, const Rat& x1, const Rat& x2,
                               const std::vector<std::vector<double>>& directions) {
  for (const Curve& c : s.curves)
    if (curve_eval(c, x1, x2) < 0)
      throw std::invalid_argument("lift point lies outside the closed region");
  if (directions.size() != s.equations.size())
    throw std::invalid_argument("one direction per equation required");

  std::vector<double> pt(s.ambient_dimension, 0.0);
  pt[0] = x1.get_d();
  pt[1] = x2.get_d();
  for (size_t e = 0; e < s.equations.size(); ++e) {
    const GroupEquation& eq = s.equations[e];
    const std::vector<double>& dir = directions[e];
    if (static_cast<int>(dir.size()) != eq.exponent + 1)
      throw std::invalid_argument("direction for group " + std::to_string(eq.group) +
                                  " needs " + std::to_string(eq.exponent + 1) + " coordinates");
    Rat prod = poly_eval(eq.product, x1, x2);
    if (prod == 0) continue;  // exact zero block on a wall
    double norm2 = 0;
    for (double d : dir) norm2 += d * d;
    if (norm2 == 0) throw std::invalid_argument("zero direction for group " +
                                                std::to_string(eq.group));
    double scale = std::sqrt(prod.get_d() / norm2);
    for (int k = 0; k <= eq.exponent; ++k) pt[2 + eq.y_offset + k] = dir[k] * scale;
  }
  return pt;
}

namespace {

// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
std::vector<double> sym_eigenvalues(std::vector<std::vector<double>> m) {
  int n = static_cast<int>(m.size());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (m[p][q] == 0) continue;
        double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), sn = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - sn * mkq;
          m[k][q] = sn * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - sn * mqk;
          m[q][k] = sn * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = m[i][i];
  return ev;
}

}  // namespace

JacobianReport jacobian_rank_check(const AlgebraicSystem& s,
                                   const std::vector<std::vector<double>>& points) {
  JacobianReport rep;
  rep.min_singular_value = std::numeric_limits<double>::infinity();
  int m = static_cast<int>(s.equations.size());
  std::vector<Poly2> dx1(m), dx2(m);
  for (int e = 0; e < m; ++e) {
    dx1[e] = poly_diff(s.equations[e].product, 0);
    dx2[e] = poly_diff(s.equations[e].product, 1);
  }
  for (const std::vector<double>& pt : points) {
    for (double r : system_residuals(s, pt)) rep.max_residual = std::max(rep.max_residual, std::abs(r));
    // J is m x ambient; singular values via the m x m Gram matrix J J^T.
    // Each row is scaled to unit norm first: group products have wildly
    // different polynomial magnitudes, and rank deficiency lives in the
    // angles between the constraint normals, not in their lengths. A row
    // whose gradient vanishes outright is left at zero and fails the check.
    std::vector<std::vector<double>> rows(m, std::vector<double>(s.ambient_dimension, 0.0));
    for (int e = 0; e < m; ++e) {
      const GroupEquation& eq = s.equations[e];
      rows[e][0] = poly_eval(dx1[e], pt[0], pt[1]);
      rows[e][1] = poly_eval(dx2[e], pt[0], pt[1]);
      for (int k = 0; k <= eq.exponent; ++k)
        rows[e][2 + eq.y_offset + k] = -2 * pt[2 + eq.y_offset + k];
      double n2 = 0;
      for (double v : rows[e]) n2 += v * v;
      if (n2 > 0)
        for (double& v : rows[e]) v /= std::sqrt(n2);
    }
    std::vector<std::vector<double>> gram(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < s.ambient_dimension; ++k) gram[i][j] += rows[i][k] * rows[j][k];
    std::vector<double> ev = sym_eigenvalues(gram);
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (double v : ev) {
      double sv = std::sqrt(std::max(0.0, v));
      lo = std::min(lo, sv);
      hi = std::max(hi, sv);
    }
    rep.min_singular_value = std::min(rep.min_singular_value, lo);
    rep.worst_ratio = std::min(rep.worst_ratio, hi > 0 ? lo / hi : 0.0);
    ++rep.points_checked;
  }
  if (points.empty()) rep.min_singular_value = 0;
  rep.pass = rep.points_checked > 0 && rep.worst_ratio > 1e-6 && rep.max_residual <= 1e-9;
  return rep;
}

}  // namespace reebforge
