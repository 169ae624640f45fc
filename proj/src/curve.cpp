#include "ecpair/curve.hpp"

#include "ecpair/errors.hpp"
#include "ecpair/factor.hpp"

namespace ecp {

bool Point::operator==(const Point& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
}

bool Point::operator<(const Point& o) const {
    if (infinity != o.infinity) return infinity;
    if (infinity) return false;
    if (x != o.x) return x < o.x;
    return y < o.y;
}

std::string Point::str() const {
    if (infinity) return "O";
    return "(" + to_string(x) + ", " + to_string(y) + ")";
}

Invariants compute_invariants(const std::array<Rational, 5>& a) {
    const auto& [a1, a2, a3, a4, a6] = a;
    Invariants v;
    v.b2 = a1 * a1 + 4 * a2;
    v.b4 = 2 * a4 + a1 * a3;
    v.b6 = a3 * a3 + 4 * a6;
    v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
    if (v.disc != 0) v.j = v.c4 * v.c4 * v.c4 / v.disc;
    return v;
}

Curve::Curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : Curve(std::array<Rational, 5>{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)}) {}

Curve::Curve(const std::array<Rational, 5>& a) : a_(a), inv_(compute_invariants(a)) {
    if (inv_.disc == 0) fail("SingularCurve", "discriminant vanishes for " + str());
}

Rational Curve::equation(const Rational& x, const Rational& y) const {
    return y * y + a1() * x * y + a3() * y - x * x * x - a2() * x * x - a4() * x - a6();
}

bool Curve::contains(const Point& P) const { return P.infinity || equation(P.x, P.y) == 0; }

Rational Curve::dF_dx(const Point& P) const { return a1() * P.y - 3 * P.x * P.x - 2 * a2() * P.x - a4(); }

Rational Curve::dF_dy(const Point& P) const { return 2 * P.y + a1() * P.x + a3(); }

Point Curve::neg(const Point& P) const {
    if (P.infinity) return P;
    return Point::affine(P.x, -P.y - a1() * P.x - a3());
}

Point Curve::add(const Point& P, const Point& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational lambda, nu;
    if (P.x == Q.x) {
        if (P.y + Q.y + a1() * Q.x + a3() == 0) return Point::origin();
        Rational den = 2 * P.y + a1() * P.x + a3();
        lambda = (3 * P.x * P.x + 2 * a2() * P.x + a4() - a1() * P.y) / den;
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    nu = P.y - lambda * P.x;
    Rational x3 = lambda * lambda + a1() * lambda - a2() - P.x - Q.x;
    Rational y3 = -(lambda + a1()) * x3 - nu - a3();
    return Point::affine(x3, y3);
}

Point Curve::mul(const Point& P, long k) const {
    Point base = k < 0 ? neg(P) : P;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Point acc = Point::origin();
    while (n) {
        if (n & 1) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

long Curve::order(const Point& P, long bound) const {
    Point acc = P;
    for (long k = 1; k <= bound; ++k) {
        if (acc.infinity) return k;
        acc = add(acc, P);
    }
    return 0;
}

std::vector<Rational> Curve::ys_over(const Rational& x) const {
    // y^2 + B y - C = 0
    Rational B = a1() * x + a3();
    Rational C = x * x * x + a2() * x * x + a4() * x + a6();
    Rational disc = B * B + 4 * C;
    if (!is_rational_square(disc)) return {};
    Rational s = rational_sqrt(disc);
    if (s == 0) return {-B / 2};
    Rational y1 = (-B - s) / 2, y2 = (-B + s) / 2;
    return {y1, y2};
}

std::string Curve::str() const {
    std::string s = "[";
    for (size_t i = 0; i < 5; ++i) s += (i ? "," : "") + to_string(a_[i]);
    return s + "]";
}

Curve Transform::apply(const Curve& E) const {
    const auto& [a1, a2, a3, a4, a6] = E.coeffs();
    Rational n1 = (a1 + 2 * s) / u;
    Rational n2 = (a2 - s * a1 + 3 * r - s * s) / (u * u);
    Rational n3 = (a3 + r * a1 + 2 * t) / (u * u * u);
    Rational n4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / rpow(u, 4);
    Rational n6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / rpow(u, 6);
    return Curve(n1, n2, n3, n4, n6);
}

Point Transform::forward(const Point& P) const {
    if (P.infinity) return P;
    Rational xp = (P.x - r) / (u * u);
    Rational yp = (P.y - s * (P.x - r) - t) / (u * u * u);
    return Point::affine(xp, yp);
}

Point Transform::backward(const Point& P) const {
    if (P.infinity) return P;
    Rational x = u * u * P.x + r;
    Rational y = u * u * u * P.y + s * u * u * P.x + t;
    return Point::affine(x, y);
}

Transform Transform::then(const Transform& next) const {
    Transform c;
    c.u = u * next.u;
    c.r = u * u * next.r + r;
    c.s = u * next.s + s;
    c.t = u * u * u * next.t + s * u * u * next.r + t;
    return c;
}

IntegralModel integral_model(const Curve& E) {
    // Smallest D with D^i a_i integral when the denominators factor; lcm otherwise.
    Integer D = 1;
    try {
        std::map<Integer, long> need;
        const long weights[5] = {1, 2, 3, 4, 6};
        for (size_t i = 0; i < 5; ++i) {
            const Integer& den = E.coeffs()[i].get_den();
            if (den == 1) continue;
            for (const auto& [p, e] : factor_integer(den)) {
                long k = (e + weights[i] - 1) / weights[i];
                long& slot = need[p];
                if (k > slot) slot = k;
            }
        }
        for (const auto& [p, k] : need) D *= ipow(p, static_cast<unsigned long>(k));
    } catch (const MathError&) {
        D = 1;
        for (const auto& a : E.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), a.get_den().get_mpz_t());
    }
    Transform T;
    T.u = Rational(1, D);
    return {T.apply(E), T};
}

} // namespace ecp
