#include "reebforge/rational.hpp"

namespace reebforge {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Int rat_ceil(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

bool int_is_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool rat_is_square(const Rat& q) {
  return q >= 0 && int_is_square(q.get_num()) && int_is_square(q.get_den());
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (!rat_is_square(q)) return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(n, d);
}

// Classic continued-fraction descent: if an integer lies strictly inside,
// take the smallest one; otherwise both endpoints share an integer part n,
// and x in (lo, hi) iff 1/(x - n) in (1/(hi - n), 1/(lo - n)), which
// recurses on a strictly shallower continued-fraction tail.
Rat rat_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("rat_between needs lo < hi");
  Rat n(rat_floor(lo) + 1);
  if (lo < n && n < hi) return n;
  Rat base(rat_floor(lo));
  if (lo == base) {
    // Interval is (n, n + frac) with frac <= 1: return n + 1/k for the
    // smallest k with 1/k < hi - n.
    Rat gap = hi - base;
    Int k = rat_floor(1 / gap) + 1;
    return base + Rat(1, k);
  }
  Rat inner = rat_between(1 / (hi - base), 1 / (lo - base));
  return base + 1 / inner;
}

}  // namespace reebforge
