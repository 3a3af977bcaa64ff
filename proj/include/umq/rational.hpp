#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace umq {

/// All distances, labels and moduli values are exact rationals. GMP keeps
/// mpq_class canonical (lowest terms, positive denominator) through
/// arithmetic; parsing is the only place non-canonical text can enter, and
/// parse_rational rejects it.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or an integer string. The text must already be in lowest
/// terms with a positive denominator ("2/4", "4/2", "0/3", "1/-2" are all
/// rejected). Throws Error("FormatError").
Rational parse_rational(std::string_view text);

/// num/den reduced to canonical form. The mpq_class two-argument constructor
/// does not canonicalize, and mpq equality assumes canonical operands; build
/// fractions through this helper instead.
Rational frac(long num, long den);

/// Canonical text form, inverse of parse_rational: "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// base^exp with an integer exponent of either sign. base must be nonzero
/// when exp < 0.
Rational rational_pow(const Rational& base, long exp);

/// Exact n-th root, n >= 1, or nullopt when value is not a perfect n-th
/// power of a rational. value must be >= 0.
std::optional<Rational> rational_root(const Rational& value, unsigned long n);

/// base^(p/q) when the result is rational, nullopt otherwise. base must be
/// positive unless the exponent is a nonnegative integer.
std::optional<Rational> rational_pow_exact(const Rational& base, const Rational& exp);

}  // namespace umq
