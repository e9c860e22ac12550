#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace alvero {

/// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from strings go through
/// parse_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

/// Binomial coefficient C(n, k) by Pascal's recurrence; zero when k > n.
Integer binomial(unsigned n, unsigned k);

Integer factorial(unsigned n);

}  // namespace alvero
