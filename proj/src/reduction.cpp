#include "ecpair/reduction.hpp"

#include "ecpair/errors.hpp"
#include "ecpair/factor.hpp"

#include <limits>

namespace ecp {

namespace {

constexpr long kInfinite = std::numeric_limits<long>::max();

long val_or_inf(const Rational& r, const Integer& p) { return r == 0 ? kInfinite : valuation(r, p); }

bool p_integral(const Curve& E, const Integer& p) {
    for (const auto& a : E.coeffs())
        if (a != 0 && valuation(a, p) < 0) return false;
    return true;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

long legendre(const Integer& a, const Integer& p) {
    Integer r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

// Slopes of the tangent cone at the node of the reduction mod p (p in {2, 3},
// p-integral model with multiplicative reduction).
bool split_by_tangent_cone(const Curve& E, long p) {
    auto red = [&](const Rational& a) {
        Integer num = a.get_num() % p, den = a.get_den() % p;
        if (num < 0) num += p;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(p).get_mpz_t());
        Integer out = num * inv % p;
        return out.get_si();
    };
    long a1 = red(E.a1()), a2 = red(E.a2()), a3 = red(E.a3()), a4 = red(E.a4()), a6 = red(E.a6());
    auto md = [p](long v) { return ((v % p) + p) % p; };
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            long F = md(y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6);
            long Fx = md(a1 * y - 3 * x * x - 2 * a2 * x - a4);
            long Fy = md(2 * y + a1 * x + a3);
            if (F || Fx || Fy) continue;
            long c = md(-(3 * x + a2));
            for (long T = 0; T < p; ++T)
                if (md(T * T + a1 * T + c) == 0) return true;
            return false;
        }
    fail("DomainError", "no singular point found modulo " + std::to_string(p));
}

// One integral change of variables with u = p, if any.
bool scale_down_once(Curve& E, long p) {
    long p2 = p * p, p3 = p2 * p;
    for (long r = 0; r < p2; ++r)
        for (long s = 0; s < p; ++s)
            for (long t = 0; t < p3; ++t) {
                Transform T;
                T.u = p;
                T.r = r;
                T.s = s;
                T.t = t;
                Curve C = T.apply(E);
                if (p_integral(C, Integer(p))) {
                    E = C;
                    return true;
                }
            }
    return false;
}

} // namespace

ReductionData multiplicative_reduction_data(const Curve& E, const Integer& p) {
    if (p < 2 || !is_certified_prime(p)) fail("DomainError", "p must be prime");
    ReductionData out;
    const Invariants& inv = E.invariants();
    if (inv.j == 0 || valuation(inv.j, p) >= 0) return out;
    long n = -valuation(inv.j, p);
    if (p >= 5) {
        long v4 = val_or_inf(inv.c4, p), v6 = val_or_inf(inv.c6, p);
        long k = std::min(v4 == kInfinite ? kInfinite : floor_div(v4, 4), v6 == kInfinite ? kInfinite : floor_div(v6, 6));
        Rational c4 = inv.c4 / rpow(Rational(p), 4 * k);
        Rational c6 = inv.c6 / rpow(Rational(p), 6 * k);
        if (c4 == 0 || valuation(c4, p) != 0) return out; // additive
        out.multiplicative = true;
        out.n = n;
        Rational m6 = -c6;
        Integer num = m6.get_num() * m6.get_den();
        out.split = legendre(num, p) == 1;
        return out;
    }
    long pl = p.get_si();
    Curve M = integral_model(E).curve;
    long v4 = val_or_inf(M.invariants().c4, p);
    if (v4 == kInfinite || v4 % 4 != 0) return out;
    long steps = v4 / 4;
    long per_step = pl * pl * pl * pl * pl * pl;
    long budget = 1;
    for (long i = 0; i < steps; ++i) budget *= per_step;
    if (budget > (1L << 20)) fail("AmbiguousModel", "minimal model search too large at p = " + p.get_str());
    for (long i = 0; i < steps; ++i)
        if (!scale_down_once(M, pl)) return out; // additive, potentially multiplicative
    if (valuation(M.invariants().c4, p) != 0) return out;
    out.multiplicative = true;
    out.n = n;
    out.split = split_by_tangent_cone(M, pl);
    return out;
}

} // namespace ecp
