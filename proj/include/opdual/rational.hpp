#pragma once

#include <gmpxx.h>

#include <string>

namespace opdual {

// Exact rational coefficients. GMP's mpq_class keeps values canonical
// (gcd(|num|, den) = 1, den > 0) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "n" or "n/d" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational rationalFromString(const std::string& text);

// mpq_class(n, d) does not canonicalize; this does. Throws on d == 0.
Rational makeRational(long num, long den);

// "n" when the denominator is 1, otherwise "n/d".
std::string rationalToString(const Rational& value);

inline bool isIntegral(const Rational& value) { return value.get_den() == 1; }

}  // namespace opdual
