#pragma once

// Exact rational scalar used throughout the library.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyponorm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Always "p/q" (integers as "p/1") so consumers never need a special case.
std::string to_string(const Rational& value);

/// Decimal approximation such as "2.74802e-06"; never underflows.
std::string to_scientific(const Rational& value, int digits = 6);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational from_int(long value) { return Rational(value); }

}  // namespace hyponorm
