#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hompoisson {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "-p", or "p/q" with decimal integers. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// True when numerator and denominator share no factor and the denominator is positive.
bool is_canonical(const Rational& r);

}  // namespace hompoisson
