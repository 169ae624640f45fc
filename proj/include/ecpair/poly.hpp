#pragma once

#include "ecpair/rational.hpp"

#include <vector>

namespace ecp {

// Dense integer polynomial; coefficient i multiplies x^i. Zero polynomial is
// the empty vector.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
long degree(const ZPoly& f); // -1 for zero
ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const Integer& c, const ZPoly& a);
ZPoly derivative(const ZPoly& f);
Integer content(const ZPoly& f);
// f / content(f) with positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);
Rational evaluate(const ZPoly& f, const Rational& x);
// f(c * x)
ZPoly scale_variable(const ZPoly& f, const Integer& c);
// Exact division by x - r is not needed; root finding works on f directly.

// All rational roots of f, ascending, without multiplicity. Uses roots modulo
// a prime where f is squarefree, Hensel lifting, and rational reconstruction;
// each candidate is verified exactly.
std::vector<Rational> rational_roots(const ZPoly& f);

} // namespace ecp
