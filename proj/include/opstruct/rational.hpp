#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace opstruct {

// Exact arbitrary-precision rational. mpq_class keeps the value canonical
// (reduced, positive denominator) as long as every constructor path ends in
// canonicalize(); the helpers below do that.
using Rational = mpq_class;

Rational frac(long num, long den = 1);

// Accepts "p", "p/q", with optional sign. Rejects zero denominators,
// whitespace inside the number and anything that is not an integer ratio.
Rational parse_rational(std::string_view text);

// Canonical "p/q" or "p" when q = 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace opstruct
