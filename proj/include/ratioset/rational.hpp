#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ratioset {

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den);

/// Parses "p/q" or an integer. Throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);

/// base^exponent without intermediate canonicalization.
Rational pow(const Rational& base, std::uint64_t exponent);

std::string to_string(const Rational& value);

/// Natural log of a positive rational, accurate even when the numerator and
/// denominator overflow a double.
double log_of(const Rational& value);

/// log(1 + x) for an exact x > -1, computed without forming 1 + x in floating
/// point.
double log1p_of(const Rational& x);

}  // namespace ratioset
