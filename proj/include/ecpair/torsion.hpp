#pragma once

#include "ecpair/curve.hpp"
#include "ecpair/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ecp {

// Integer polynomial in x (coordinates of E itself) whose rational roots are
// exactly the x-coordinates of the points P != O with nP = O. Primitive, with
// positive leading coefficient. n >= 2.
ZPoly division_polynomial(const Curve& E, int n);

// Points P != O with nP = O, found from the rational roots of the division
// polynomial.
std::vector<Point> points_killed_by(const Curve& E, int n);

// #E(F_p) for an integer-coefficient model with good reduction at odd p.
long count_points_mod_p(const Curve& integral, unsigned long p);

// gcd of #E(F_p) over small odd primes of good reduction; a multiple of
// #E(Q)_tors.
long torsion_order_bound(const Curve& E);

// E(Q)_tors = Z/d1 x Z/d2 with d2 | d1, d2 in {1, 2}.
struct TorsionGroup {
    long d1 = 1, d2 = 1;
    Point gen1, gen2;
    // elements[i + d1*j] = i*gen1 + j*gen2.
    std::vector<Point> elements;

    long size() const { return d1 * d2; }
    const Point& element(long i, long j) const;
    // Coordinates (i, j) of P, if P is in the group.
    std::optional<std::pair<long, long>> coordinates(const Point& P) const;
};

TorsionGroup torsion_subgroup(const Curve& E);

// Group generated by the given points (each must have finite order <= 12).
// Used when generators are known, e.g. for family curves with marked points.
TorsionGroup group_from_generators(const Curve& E, const Point& P, const Point& Q);

// Tate normal form y^2 + (1+a)xy + by = x^3 + bx^2 with P at (0, 0).
struct TateNormalForm {
    Rational a, b;
    Transform transform; // original -> normal form
};

// Throws NotTorsion if P = O, OrderTooSmall if P has order 2 or 3.
TateNormalForm tate_normal_form(const Curve& E, const Point& P);

} // namespace ecp
