#pragma once

#include <string>

#include "reebforge/rational.hpp"

namespace reebforge {

// Exact value of the form a + b*sqrt(c) with a, b, c rational and c >= 0.
// Every coordinate the sweep ever touches lives here: circle/line and
// circle/circle crossing coordinates are roots of rational quadratics.
//
// c is NOT normalized (no square-free reduction — factoring large
// denominators would dominate the runtime). Instead all predicates are
// decided by case analysis and squaring:
//
//   sign(a + b*sqrt(c)) for b != 0, c > 0:
//     same signs of a, b decide outright; opposite signs reduce to
//     comparing a^2 with b^2*c.
//
//   sign(A + B*sqrt(c1) + C*sqrt(c2)) (needed to compare two QuadExt
//   with different radicands):
//     let T = A + B*sqrt(c1), U = C*sqrt(c2). If sign(T) and sign(U)
//     agree (or one is zero) the answer is immediate; otherwise the sum
//     has the sign of whichever has larger magnitude, and
//     T^2 - U^2 = (A^2 + B^2 c1 - C^2 c2) + 2AB*sqrt(c1) is again a
//     single-radical quantity.
//
// So every comparison terminates in exact rational arithmetic.
struct QuadExt {
  Rat a = 0;  // rational part
  Rat b = 0;  // coefficient of sqrt(c)
  Rat c = 0;  // radicand, >= 0

  QuadExt() = default;
  QuadExt(Rat rational) : a(std::move(rational)) {}  // NOLINT: implicit
  QuadExt(Rat a_, Rat b_, Rat c_);

  // Exactly representable as a rational (b == 0, c == 0, or c a rational
  // square)?
  bool is_rational() const;
  // The rational value; requires is_rational().
  Rat to_rational() const;

  double to_double() const;
  std::string to_string() const;  // debug form, e.g. "3/2 + 1*sqrt(5)"

  QuadExt operator-() const;
};

// Exact sign: -1, 0, +1.
int sign(const QuadExt& v);

// Exact three-way comparison, radicands may differ.
int compare(const QuadExt& x, const QuadExt& y);

inline bool operator<(const QuadExt& x, const QuadExt& y) { return compare(x, y) < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return compare(x, y) > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return compare(x, y) <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return compare(x, y) >= 0; }
inline bool operator==(const QuadExt& x, const QuadExt& y) { return compare(x, y) == 0; }
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return compare(x, y) != 0; }

// Sum/difference with a rational, and rational scaling, stay in the form.
QuadExt operator+(const QuadExt& x, const Rat& r);
QuadExt operator-(const QuadExt& x, const Rat& r);
QuadExt operator*(const Rat& r, const QuadExt& x);

// Field arithmetic inside one quadratic extension Q(sqrt(c)): both
// operands must carry the same radicand (or be plain rationals). Lets
// polynomials with rational coefficients be evaluated exactly at crossing
// points, whose two coordinates always share one radicand. Throws
// std::invalid_argument on mixed radicands.
QuadExt field_add(const QuadExt& x, const QuadExt& y);
QuadExt field_sub(const QuadExt& x, const QuadExt& y);
QuadExt field_mul(const QuadExt& x, const QuadExt& y);

// A rational strictly between lo and hi (requires lo < hi). Found by
// refining a dyadic grid around the double approximations and verifying
// exactly, so the result is certified even when the doubles are off.
Rat rational_between(const QuadExt& lo, const QuadExt& hi);

}  // namespace reebforge
