#pragma once
// The defining polynomial system of a realized region. Each curve group
// contributes one equation
//
//     f_{g,1}(x1,x2) * ... * f_{g,k}(x1,x2) = y_{g,0}^2 + ... + y_{g,I}^2
//
// so the solution set is a smooth surface bundle over the plane region:
// over interior points every group factor is positive and the y block
// sweeps a sphere S^I; where one curve vanishes the sphere collapses
// through a disk. Groups without curves contribute neither an equation
// nor coordinates.
//
// Everything symbolic is exact rational; lifting and the Jacobian rank
// check are numeric spot checks of the smoothness claim.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reebforge/arrangement.hpp"

namespace reebforge {

// Bivariate polynomial, exact coefficients; key = (degree in x1, x2).
using Poly2 = std::map<std::pair<int, int>, Rat>;

Poly2 poly_of_curve(const Curve& c);
Poly2 poly_mul(const Poly2& a, const Poly2& b);
Poly2 poly_diff(const Poly2& p, int var);  // var: 0 = x1, 1 = x2
Rat poly_eval(const Poly2& p, const Rat& x1, const Rat& x2);
double poly_eval(const Poly2& p, double x1, double x2);
std::string poly_to_string(const Poly2& p);

struct GroupEquation {
  int group = 0;
  int exponent = 0;  // sphere dimension I: the y block has I+1 coordinates
  int y_offset = 0;  // block start among the y coordinates
  Poly2 product;     // expanded product of the group's curve polynomials
  std::vector<int> curve_indices;
};

struct AlgebraicSystem {
  std::vector<Curve> curves;             // copy of the arrangement's curves
  std::vector<GroupEquation> equations;  // nonempty groups, ascending
  int ambient_dimension = 2;             // 2 + sum of (I+1)
  int manifold_dimension = 2;            // 2 + sum of I
};

AlgebraicSystem emit_algebraic_system(const Arrangement& a);

// Equation residuals at an ambient point (x1, x2, y...).
// One scaled residual per equation: |product - ||y||^2| divided by
// max(1, |product|) — relative where the product is large, absolute near
// its zero set.
std::vector<double> system_residuals(const AlgebraicSystem& s, const std::vector<double>& pt);

// Lifts a plane point of the closed region: each group's y block is its
// unit direction scaled by the square root of the group product. A zero
// block where the product vanishes is exact. Throws on points outside the
// closed region, and on zero or wrongly sized directions.
std::vector<double> lift_point(const AlgebraicSystem& s, const Rat& x1, const Rat& x2,
                               const std::vector<std::vector<double>>& directions);

struct JacobianReport {
  int points_checked = 0;
  double max_residual = 0;        // worst equation residual over all points
  // Singular values are taken after scaling every Jacobian row to unit
  // norm, so they measure the angular independence of the constraint
  // normals rather than raw polynomial magnitudes.
  double min_singular_value = 0;  // smallest scaled singular value seen
  double worst_ratio = 1;         // min over points of sigma_min / sigma_max
  bool pass = false;              // worst_ratio > 1e-6 and residuals <= 1e-9
};

JacobianReport jacobian_rank_check(const AlgebraicSystem& s,
                                   const std::vector<std::vector<double>>& points);

}  // namespace reebforge
