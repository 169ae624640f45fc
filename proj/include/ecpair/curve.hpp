#pragma once

#include "ecpair/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace ecp {

struct Point {
    bool infinity = true;
    Rational x, y;

    static Point origin() { return {}; }
    static Point affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
    bool is_origin() const { return infinity; }
    bool operator==(const Point& o) const;
    bool operator<(const Point& o) const; // any strict total order
    std::string str() const;
};

struct Invariants {
    Rational b2, b4, b6, b8, c4, c6, disc, j;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular.
class Curve {
public:
    // Throws MathError("SingularCurve") if the discriminant vanishes.
    Curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);
    explicit Curve(const std::array<Rational, 5>& a);

    const std::array<Rational, 5>& coeffs() const { return a_; }
    const Rational& a1() const { return a_[0]; }
    const Rational& a2() const { return a_[1]; }
    const Rational& a3() const { return a_[2]; }
    const Rational& a4() const { return a_[3]; }
    const Rational& a6() const { return a_[4]; }
    const Invariants& invariants() const { return inv_; }

    bool contains(const Point& P) const;
    // F(x, y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6 and partials.
    Rational equation(const Rational& x, const Rational& y) const;
    Rational dF_dx(const Point& P) const;
    Rational dF_dy(const Point& P) const;

    Point neg(const Point& P) const;
    Point add(const Point& P, const Point& Q) const;
    Point sub(const Point& P, const Point& Q) const { return add(P, neg(Q)); }
    Point mul(const Point& P, long k) const;
    // Exact order if it is at most `bound`, otherwise 0.
    long order(const Point& P, long bound = 12) const;

    // y-values over Q with (x, y) on the curve.
    std::vector<Rational> ys_over(const Rational& x) const;

    bool operator==(const Curve& o) const { return a_ == o.a_; }
    std::string str() const;

private:
    std::array<Rational, 5> a_;
    Invariants inv_;
};

Invariants compute_invariants(const std::array<Rational, 5>& a);

// Change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, mapping the
// old curve to a new one with coordinates (x', y').
struct Transform {
    Rational u = 1, r = 0, s = 0, t = 0;

    Curve apply(const Curve& E) const;
    Point forward(const Point& P) const;  // old coordinates -> new
    Point backward(const Point& P) const; // new coordinates -> old
    // (*this) followed by `next`.
    Transform then(const Transform& next) const;
};

// Integer-coefficient model obtained by pure scaling, with the transform used.
struct IntegralModel {
    Curve curve;
    Transform transform;
};
IntegralModel integral_model(const Curve& E);

} // namespace ecp
