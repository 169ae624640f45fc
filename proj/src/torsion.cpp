#include "ecpair/torsion.hpp"

#include "ecpair/errors.hpp"
#include "ecpair/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ecp {

namespace {

// x-polynomials f_n of the division polynomials of an integral model:
// psi_n = f_n for odd n and psi_n = psi_2 f_n for even n.
class DivisionPolys {
public:
    explicit DivisionPolys(const Curve& integral) {
        const auto& v = integral.invariants();
        b2_ = v.b2.get_num();
        b4_ = v.b4.get_num();
        b6_ = v.b6.get_num();
        b8_ = v.b8.get_num();
        F_ = {b6_, 2 * b4_, b2_, Integer(4)};
        F2_ = F_ * F_;
        cache_[0] = {};
        cache_[1] = {Integer(1)};
        cache_[2] = {Integer(1)};
        cache_[3] = {b8_, 3 * b6_, 3 * b4_, b2_, Integer(3)};
        cache_[4] = {b4_ * b8_ - b6_ * b6_, b2_ * b8_ - b4_ * b6_, 10 * b8_, 10 * b6_, 5 * b4_, b2_, Integer(2)};
    }

    const ZPoly& two_torsion() const { return F_; }

    const ZPoly& f(int n) {
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        ZPoly out;
        int m = n / 2;
        if (n % 2 == 1) {
            ZPoly t1 = f(m + 2) * cube(f(m));
            ZPoly t2 = f(m - 1) * cube(f(m + 1));
            out = (m % 2 == 0) ? F2_ * t1 - t2 : t1 - F2_ * t2;
        } else {
            ZPoly inner = f(m + 2) * f(m - 1) * f(m - 1) - f(m - 2) * f(m + 1) * f(m + 1);
            out = f(m) * inner;
        }
        return cache_[n] = out;
    }

private:
    static ZPoly cube(const ZPoly& p) { return p * p * p; }

    Integer b2_, b4_, b6_, b8_;
    ZPoly F_, F2_;
    std::map<int, ZPoly> cache_;
};

// x' = D^2 x for the pure scaling u = 1/D.
ZPoly to_original_variable(const ZPoly& f, const Transform& T) {
    Rational inv_u2 = 1 / (T.u * T.u);
    return primitive_part(scale_variable(f, inv_u2.get_num()));
}

std::vector<Point> points_over_roots(const IntegralModel& M, const ZPoly& f) {
    std::vector<Point> out;
    for (const Rational& x : rational_roots(f))
        for (const Rational& y : M.curve.ys_over(x)) out.push_back(M.transform.backward(Point::affine(x, y)));
    return out;
}

bool is_prime_power_of(long n, long ell) {
    if (n < 1) return false;
    while (n % ell == 0) n /= ell;
    return n == 1;
}

TorsionGroup assemble(const Curve& E, std::vector<Point> all) {
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    TorsionGroup G;
    long size = static_cast<long>(all.size());
    long d1 = 1;
    for (const auto& P : all) d1 = std::max(d1, E.order(P));
    long d2 = size / d1;
    if (d1 * d2 != size || (d2 != 1 && d2 != 2)) fail("DomainError", "inconsistent torsion structure on " + E.str());
    G.d1 = d1;
    G.d2 = d2;
    for (const auto& P : all)
        if (E.order(P) == d1) { G.gen1 = P; break; }
    std::set<Point> cyclic;
    for (long i = 0; i < d1; ++i) cyclic.insert(E.mul(G.gen1, i));
    if (d2 == 2) {
        for (const auto& P : all)
            if (E.order(P) == 2 && !cyclic.count(P)) { G.gen2 = P; break; }
    }
    G.elements.resize(static_cast<size_t>(size));
    for (long j = 0; j < d2; ++j)
        for (long i = 0; i < d1; ++i) G.elements[i + d1 * j] = E.add(E.mul(G.gen1, i), E.mul(G.gen2, j));
    return G;
}

} // namespace

ZPoly division_polynomial(const Curve& E, int n) {
    if (n < 2) fail("DomainError", "division polynomial index must be >= 2");
    IntegralModel M = integral_model(E);
    DivisionPolys psi(M.curve);
    ZPoly f = psi.f(n);
    if (n % 2 == 0) f = psi.two_torsion() * f;
    return to_original_variable(f, M.transform);
}

std::vector<Point> points_killed_by(const Curve& E, int n) {
    IntegralModel M = integral_model(E);
    DivisionPolys psi(M.curve);
    std::vector<Point> out = points_over_roots(M, psi.f(n));
    if (n % 2 == 0) {
        auto two = points_over_roots(M, psi.two_torsion());
        out.insert(out.end(), two.begin(), two.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long count_points_mod_p(const Curve& integral, unsigned long p) {
    auto red = [&](const Rational& a) {
        return static_cast<long>(mpz_fdiv_ui(a.get_num().get_mpz_t(), p));
    };
    long a1 = red(integral.a1()), a2 = red(integral.a2()), a3 = red(integral.a3());
    long a4 = red(integral.a4()), a6 = red(integral.a6());
    long P = static_cast<long>(p);
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (long y = 1; y < P; ++y) chi[(y * y) % P] = 1;
    long count = 1;
    for (long x = 0; x < P; ++x) {
        long B = (a1 * x + a3) % P;
        long C = (((x * x % P) * x) % P + a2 * x % P * x % P + a4 * x % P + a6) % P;
        long d = (B * B + 4 * C) % P;
        count += 1 + chi[d];
    }
    return count;
}

long torsion_order_bound(const Curve& E) {
    IntegralModel M = integral_model(E);
    const Integer disc = M.curve.invariants().disc.get_num();
    long g = 0;
    int used = 0;
    for (unsigned long p : primes_up_to(2000)) {
        if (p < 3) continue;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        g = std::gcd(g, count_points_mod_p(M.curve, p));
        if (++used >= 16) break;
    }
    return g;
}

const Point& TorsionGroup::element(long i, long j) const {
    i %= d1; if (i < 0) i += d1;
    j %= d2; if (j < 0) j += d2;
    return elements[static_cast<size_t>(i + d1 * j)];
}

std::optional<std::pair<long, long>> TorsionGroup::coordinates(const Point& P) const {
    for (long j = 0; j < d2; ++j)
        for (long i = 0; i < d1; ++i)
            if (elements[static_cast<size_t>(i + d1 * j)] == P) return std::make_pair(i, j);
    return std::nullopt;
}

TorsionGroup torsion_subgroup(const Curve& E) {
    long bound = torsion_order_bound(E);
    IntegralModel M = integral_model(E);
    DivisionPolys psi(M.curve);
    std::map<long, std::vector<Point>> parts; // prime -> points of that primary part, including O
    auto collect = [&](long ell, const ZPoly& f) {
        auto& part = parts[ell];
        if (part.empty()) part.push_back(Point::origin());
        for (const auto& P : points_over_roots(M, f)) {
            long o = E.order(P);
            if (o > 1 && is_prime_power_of(o, ell)) part.push_back(P);
        }
    };
    auto vl = [&](long ell) { long v = 0, b = bound; while (b % ell == 0) { b /= ell; ++v; } return v; };
    long v2 = vl(2), v3 = vl(3);
    if (v2 >= 1) collect(2, psi.two_torsion());
    if (v2 >= 3) collect(2, psi.f(8));
    else if (v2 == 2) collect(2, psi.f(4));
    if (v3 >= 2) collect(3, psi.f(9));
    else if (v3 == 1) collect(3, psi.f(3));
    if (bound % 5 == 0) collect(5, psi.f(5));
    if (bound % 7 == 0) collect(7, psi.f(7));

    std::vector<Point> all{Point::origin()};
    for (auto& [ell, part] : parts) {
        std::sort(part.begin(), part.end());
        part.erase(std::unique(part.begin(), part.end()), part.end());
        std::vector<Point> next;
        for (const auto& A : all)
            for (const auto& B : part) next.push_back(E.add(A, B));
        all = std::move(next);
    }
    return assemble(E, all);
}

TorsionGroup group_from_generators(const Curve& E, const Point& P, const Point& Q) {
    long oP = E.order(P), oQ = E.order(Q);
    if (oP == 0 || oQ == 0) fail("NonTorsion", "generator of order > 12");
    std::vector<Point> all;
    for (long i = 0; i < oP; ++i)
        for (long j = 0; j < oQ; ++j) all.push_back(E.add(E.mul(P, i), E.mul(Q, j)));
    return assemble(E, all);
}

TateNormalForm tate_normal_form(const Curve& E, const Point& P) {
    if (P.is_origin()) fail("NonTorsion", "the point at infinity has no normal form");
    if (!E.contains(P)) fail("DomainError", "point not on curve");
    Transform T1;
    T1.r = P.x;
    T1.t = P.y;
    Curve C1 = T1.apply(E);
    if (C1.a3() == 0) fail("OrderTooSmall", "point of order 2");
    Transform T2;
    T2.s = C1.a4() / C1.a3();
    Curve C2 = T2.apply(C1);
    if (C2.a2() == 0) fail("OrderTooSmall", "point of order 3");
    Transform T3;
    T3.u = C2.a3() / C2.a2();
    Curve C3 = T3.apply(C2);
    TateNormalForm out;
    out.transform = T1.then(T2).then(T3);
    out.a = C3.a1() - 1;
    out.b = C3.a2();
    return out;
}

} // namespace ecp
