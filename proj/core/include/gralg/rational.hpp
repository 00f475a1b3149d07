#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gralg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Serializes as "p/q" with q > 0 and gcd(p, q) = 1, including "n/1" for integers.
std::string to_fraction_string(const Rational& value);

/// Serializes integers without a denominator ("3", "-1/2").
std::string to_plain_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p"; throws gralg::Error on malformed input or q = 0.
Rational parse_fraction(std::string_view text);

}  // namespace gralg
