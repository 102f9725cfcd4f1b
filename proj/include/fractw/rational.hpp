#pragma once

#include <gmpxx.h>

#include <string>

namespace fractw {

// Exact arbitrary-precision rational. mpq_class keeps the canonical form
// (positive denominator, gcd(|num|, den) = 1) through all arithmetic, which is
// exactly the invariant every measure computation here relies on.
using Int = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. den == 0 is a BadParams error.
Rational rat(long num, long den = 1);
Rational rat(const Int& num, const Int& den);

// Parses "p/q" or "p" (arbitrary precision).
Rational rat_parse(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rational& r);

// Approximate decimal value. Report formatting only, never core logic.
double rat_approx(const Rational& r);

bool fits_long(const Int& z);

}  // namespace fractw
