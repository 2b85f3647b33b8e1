#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace squeeze {

/// Arbitrary-precision signed rational, always kept in canonical form
/// (positive denominator, coprime numerator/denominator).
using Rational = mpq_class;
using Integer = mpz_class;

enum class Rounding { Down, Up };

/// p/q in canonical form; q must be nonzero.
Rational ratio(const Integer& p, const Integer& q);

/// Parses "[+-]digits[.digits][e[+-]digits]" or "[+-]p/q" exactly.
/// "0.25" yields 1/4; "p/0" raises ParseError.
Rational rational_from_decimal(std::string_view text);

/// Canonical "p/q" rendering; integers keep the "/1" suffix.
std::string to_fraction_string(const Rational& value);

/// Directed decimal rendering with `significant` significant digits.
/// Plain notation for magnitudes in [1e-7, 1e10), scientific otherwise.
std::string to_decimal(const Rational& value, int significant, Rounding dir);

/// 2^e as an exact rational (e may be negative).
Rational pow2(long e);

/// base^exp for exp >= 0.
Rational pow(const Rational& base, unsigned long exp);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// Number of bits in the denominator.
std::size_t denominator_bits(const Rational& value);

}  // namespace squeeze
