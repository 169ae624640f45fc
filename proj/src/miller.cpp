#include "ecpair/errors.hpp"
#include "ecpair/pairing.hpp"

namespace ecp {

LineFactor LineFactor::vertical(const Rational& x0) { return {-x0, Rational(1), Rational(0)}; }

LineFactor LineFactor::line(const Rational& slope, const Rational& intercept) {
    return {-intercept, -slope, Rational(1)};
}

LineFactor LineFactor::constant(const Rational& c) { return {c, Rational(0), Rational(0)}; }

Rational LineFactor::at(const Point& P) const { return alpha + beta * P.x + gamma * P.y; }

LineFactor factor_of(const std::array<Rational, 3>& key) { return {key[0], key[1], key[2]}; }

void FactoredFunction::multiply(const LineFactor& g, long e) {
    if (e == 0) return;
    if (g.beta == 0 && g.gamma == 0 && g.alpha == 0) fail("DomainError", "zero factor");
    auto key = g.key();
    long& slot = factors_[key];
    slot += e;
    if (slot == 0) factors_.erase(key);
}

FactoredFunction FactoredFunction::pow(long k) const {
    FactoredFunction out;
    if (k == 0) return out;
    for (const auto& [key, e] : factors_) out.factors_[key] = e * k;
    return out;
}

FactoredFunction& FactoredFunction::operator*=(const FactoredFunction& o) {
    for (const auto& [key, e] : o.factors_) multiply(factor_of(key), e);
    return *this;
}

namespace {

// f *= l_{A,B} / v_{A+B}; returns A + B.
Point miller_step(const Curve& E, FactoredFunction& f, const Point& A, const Point& B) {
    if (A.is_origin()) return B;
    if (B.is_origin()) return A;
    if (A.x == B.x && A.y + B.y + E.a1() * B.x + E.a3() == 0) {
        f.multiply(LineFactor::vertical(A.x), 1);
        return Point::origin();
    }
    Rational lambda;
    if (A.x == B.x) lambda = (3 * A.x * A.x + 2 * E.a2() * A.x + E.a4() - E.a1() * A.y) / E.dF_dy(A);
    else lambda = (B.y - A.y) / (B.x - A.x);
    Rational nu = A.y - lambda * A.x;
    f.multiply(LineFactor::line(lambda, nu), 1);
    Point C = E.add(A, B);
    if (!C.is_origin()) f.multiply(LineFactor::vertical(C.x), -1);
    return C;
}

} // namespace

FactoredFunction miller_function(const Curve& E, const Point& P, long n) {
    if (n <= 0) fail("DomainError", "Miller function needs n >= 1");
    if (!E.contains(P)) fail("DomainError", "point not on curve: " + P.str());
    if (!E.mul(P, n).is_origin()) fail("NotAnnihilated", std::to_string(n) + " * " + P.str() + " != O");
    FactoredFunction f;
    if (P.is_origin()) return f;
    int top = 63 - __builtin_clzl(static_cast<unsigned long>(n));
    Point T = P;
    for (int bit = top - 1; bit >= 0; --bit) {
        f = f.pow(2);
        T = miller_step(E, f, T, T);
        if ((static_cast<unsigned long>(n) >> bit) & 1UL) T = miller_step(E, f, T, P);
    }
    return f;
}

} // namespace ecp
