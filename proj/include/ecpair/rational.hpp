#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ecp {

using Integer = mpz_class;
using Rational = mpq_class;

// a / b in canonical form; b != 0.
Rational frac(const Integer& a, const Integer& b);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Always "num/den" with den > 0, e.g. "5/1", "-2/3".
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// Parse a comma separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

// v_p(n) for n != 0.
long valuation(const Integer& n, const Integer& p);
long valuation(const Rational& r, const Integer& p);

Rational rpow(const Rational& base, long exponent);
Integer ipow(const Integer& base, unsigned long exponent);

bool is_rational_square(const Rational& r);
// Square root of a rational square; precondition is_rational_square(r).
Rational rational_sqrt(const Rational& r);

// Naive height max(|num|, |den|).
Integer height(const Rational& r);

// All reduced p/q with q >= 1, |p| <= H, q <= H, in ascending Farey order.
std::vector<Rational> rationals_of_height(long H);

} // namespace ecp
