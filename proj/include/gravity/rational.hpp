#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gravity {

// Exact arbitrary-precision rational scalar; every coefficient in the
// system. GMP keeps canonical form (lowest terms, positive denominator)
// through arithmetic, and the constructors below always canonicalize.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Text form "p/q", with "/q" omitted when the denominator is 1. This is
// also the JSON wire format for rationals.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace gravity
