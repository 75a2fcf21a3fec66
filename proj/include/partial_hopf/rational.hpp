#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace partial_hopf {

// GMP keeps mpq_class in canonical form (positive denominator, reduced)
// after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p" or "p/q".
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace partial_hopf
