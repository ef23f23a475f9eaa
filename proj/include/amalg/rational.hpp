#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace amalg {

// Exact scalar used everywhere except the complexification module.
// mpq_class keeps values canonical (gcd(p,q)=1, q>0), so operator== is
// mathematical equality and get_str() is the file format's "p/q" form.
using Rational = mpq_class;

using RatVec = std::vector<Rational>;

// Parses "p/q" or "p" (optional leading '-'). Throws ValidationError on
// anything else, including q = 0.
Rational parse_rational(const std::string& text);

// Canonical "p/q", "p" when q = 1.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

// log of a strictly positive rational, safe for values whose double
// conversion would over/underflow (needed for 2^k-th roots of x^(2^k)).
double log_to_double(const Rational& value);

// If value is the square of a rational, writes the nonnegative root and
// returns true. Exact integer square-root detection on both numerator and
// denominator.
bool exact_sqrt(const Rational& value, Rational& root);

} // namespace amalg
