#ifndef FUZZ_RATIONAL_HPP
#define FUZZ_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace fuzz {

// All grades, thresholds and coordinates are exact rationals. Comparisons,
// meets and joins must never go through floating point.
using Rational = mpq_class;

// Accepts "p/q", integers ("3", "-12") and plain decimals ("0.35", "-2.5").
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Canonical text form: integer when the denominator is 1, an exact decimal
// when the denominator divides a power of ten, "p/q" otherwise.
std::string format_rational(const Rational& value);

// Canonical fraction from machine integers. The two-argument mpq_class
// constructor skips canonicalization; this one never does.
Rational ratio(long num, long den);

// Nearest rational with denominator 10^digits (ties round away from zero).
Rational round_to_digits(const Rational& value, int digits);

// Exact dyadic expansion of x, then rounded to 10^-digits.
Rational rational_from_double(double x, int digits);

}  // namespace fuzz

#endif
