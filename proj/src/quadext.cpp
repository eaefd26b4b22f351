#include "reebforge/quadext.hpp"

#include <cmath>
#include <stdexcept>

namespace reebforge {

QuadExt::QuadExt(Rat a_, Rat b_, Rat c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (c < 0) throw std::invalid_argument("QuadExt radicand must be >= 0");
  if (b == 0 || c == 0) {
    b = 0;
    c = 0;
  }
}

bool QuadExt::is_rational() const { return b == 0 || rat_is_square(c); }

Rat QuadExt::to_rational() const {
  if (b == 0) return a;
  auto root = rat_sqrt(c);
  if (!root) throw std::logic_error("QuadExt::to_rational on irrational value");
  return a + b * *root;
}

double QuadExt::to_double() const {
  return rat_to_double(a) + rat_to_double(b) * std::sqrt(rat_to_double(c));
}

std::string QuadExt::to_string() const {
  if (b == 0) return rat_to_string(a);
  return rat_to_string(a) + " + " + rat_to_string(b) + "*sqrt(" + rat_to_string(c) + ")";
}

QuadExt QuadExt::operator-() const { return QuadExt(-a, -b, c); }

int sign(const QuadExt& v) {
  int sa = sgn(v.a);
  if (v.b == 0 || v.c == 0) return sa;
  int sb = sgn(v.b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(c) decides; compare squares.
  return sa * sgn(v.a * v.a - v.b * v.b * v.c);
}

namespace {

// sign(A + B*sqrt(c1) + C*sqrt(c2)); preconditions c1, c2 >= 0.
int sign3(const Rat& A, const Rat& B, const Rat& c1, const Rat& C, const Rat& c2) {
  if (C == 0 || c2 == 0) return sign(QuadExt(A, B, c1));
  if (B == 0 || c1 == 0) return sign(QuadExt(A, C, c2));
  if (c1 == c2) return sign(QuadExt(A, B + C, c1));
  int st = sign(QuadExt(A, B, c1));
  int su = sgn(C);  // sign of C*sqrt(c2) with c2 > 0
  if (st == 0) return su;
  if (su == 0 || st == su) return st;
  // T = A + B*sqrt(c1) and U = C*sqrt(c2) have opposite signs; the larger
  // magnitude wins, and T^2 - U^2 carries a single radical.
  Rat a2 = A * A + B * B * c1 - C * C * c2;
  return st * sign(QuadExt(a2, 2 * A * B, c1));
}

// Integer S >= sqrt(c), for crude-but-exact rational bounds.
Int ceil_sqrt(const Rat& c) {
  Int n = rat_ceil(c);
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (s * s < n) ++s;
  return s;
}

}  // namespace

int compare(const QuadExt& x, const QuadExt& y) {
  return sign3(x.a - y.a, x.b, x.c, -y.b, y.c);
}

QuadExt operator+(const QuadExt& x, const Rat& r) { return QuadExt(x.a + r, x.b, x.c); }
QuadExt operator-(const QuadExt& x, const Rat& r) { return QuadExt(x.a - r, x.b, x.c); }
QuadExt operator*(const Rat& r, const QuadExt& x) {
  if (r == 0) return QuadExt(Rat(0));
  return QuadExt(r * x.a, r * x.b, x.c);
}

namespace {

// Unify radicands: b == 0 entries adopt the partner's c. Throws when both
// carry genuinely different irrational parts.
Rat common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.b == 0) return y.c;
  if (y.b == 0) return x.c;
  if (x.c != y.c) throw std::invalid_argument("QuadExt field op: mixed radicands");
  return x.c;
}

}  // namespace

QuadExt field_add(const QuadExt& x, const QuadExt& y) {
  Rat c = common_radicand(x, y);
  return QuadExt(x.a + y.a, x.b + y.b, c);
}

QuadExt field_sub(const QuadExt& x, const QuadExt& y) {
  Rat c = common_radicand(x, y);
  return QuadExt(x.a - y.a, x.b - y.b, c);
}

QuadExt field_mul(const QuadExt& x, const QuadExt& y) {
  Rat c = common_radicand(x, y);
  return QuadExt(x.a * y.a + x.b * y.b * c, x.a * y.b + x.b * y.a, c);
}

Rat rational_between(const QuadExt& lo, const QuadExt& hi) {
  if (!(lo < hi)) throw std::invalid_argument("rational_between needs lo < hi");
  if (lo.is_rational() && hi.is_rational())
    return rat_between(lo.to_rational(), hi.to_rational());
  // Exact bisection. Invariant: A <= lo < hi <= B. Once B - A < hi - lo
  // the midpoint is forced strictly inside, so this terminates.
  Rat A = lo.b == 0 ? lo.a : lo.a - abs(lo.b) * ceil_sqrt(lo.c);
  Rat B = hi.b == 0 ? hi.a : hi.a + abs(hi.b) * ceil_sqrt(hi.c);
  while (true) {
    Rat M = (A + B) / 2;
    QuadExt m(M);
    if (compare(m, lo) <= 0) {
      A = M;
    } else if (compare(m, hi) >= 0) {
      B = M;
    } else {
      return M;
    }
  }
}

}  // namespace reebforge
