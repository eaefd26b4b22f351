#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace reebforge {

// All plane geometry in this library runs on exact rational arithmetic.
// Rat is GMP's canonical mpq_class; helpers below cover the handful of
// operations GMP does not expose directly (square testing, string forms
// used in the JSON formats, simplest-rational selection).
using Rat = mpq_class;
using Int = mpz_class;

// Parse "p/q" or "p" (optionally signed). Throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

double rat_to_double(const Rat& q);

// Largest integer <= q and smallest integer >= q.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

bool int_is_square(const Int& n);

// A canonical rational p/q (q > 0, gcd 1) is a square of a rational
// iff p >= 0 and both p and q are perfect squares.
bool rat_is_square(const Rat& q);

// Exact square root when rat_is_square; nullopt otherwise.
std::optional<Rat> rat_sqrt(const Rat& q);

// The rational with smallest denominator strictly inside the open
// interval (lo, hi); ties broken toward smaller numerator. Requires
// lo < hi. Used to pick tidy sample points and test coordinates.
Rat rat_between(const Rat& lo, const Rat& hi);

}  // namespace reebforge
