#pragma once

#include "ecpair/curve.hpp"

#include <vector>

namespace ecp {

// Truncated Laurent series sum_i c[i] * pi^(val + i); terms of exponent
// >= val + c.size() are unknown.
struct Laurent {
    long val = 0;
    std::vector<Rational> c;

    long precision() const { return val + static_cast<long>(c.size()); }
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator*(const Rational& k, const Laurent& a);
// Requires a nonzero leading coefficient.
Laurent inverse(const Laurent& a);
// First nonzero term moved to c[0]; throws PrecisionExhausted if none is known.
Laurent normalized(const Laurent& a);

enum class Uniformizer {
    // x - x0 at finite points with dF/dy != 0, y - y0 at the others, x/y at O.
    Canonical,
    // 2*pi + pi^2 for the canonical pi.
    Alternate,
};

// Expansions of the coordinate functions x and y in a uniformizer at Q.
struct LocalExpansion {
    Laurent x, y;
};

LocalExpansion local_expansion(const Curve& E, const Point& Q, Uniformizer u, long terms = 8);

} // namespace ecp
