#include "ecpair/poly.hpp"

#include "ecpair/errors.hpp"
#include "ecpair/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace ecp {

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const ZPoly& f) {
    ZPoly g = f;
    trim(g);
    return static_cast<long>(g.size()) - 1;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(out);
    return out;
}

ZPoly operator*(const Integer& c, const ZPoly& a) {
    if (c == 0) return {};
    ZPoly out(a);
    for (auto& x : out) x *= c;
    return out;
}

ZPoly derivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly out(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
    trim(out);
    return out;
}

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    ZPoly g = f;
    trim(g);
    if (g.empty()) return g;
    Integer c = content(g);
    if (g.back() < 0) c = -c;
    for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return g;
}

Rational evaluate(const ZPoly& f, const Rational& x) {
    Rational acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

ZPoly scale_variable(const ZPoly& f, const Integer& c) {
    ZPoly out(f);
    Integer pw = 1;
    for (auto& x : out) {
        x *= pw;
        pw *= c;
    }
    trim(out);
    return out;
}

namespace {

using u64 = std::uint64_t;
using Fp = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void trim_fp(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Fp reduce(const ZPoly& f, u64 p) {
    Fp out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    trim_fp(out);
    return out;
}

Fp fp_mod(Fp a, const Fp& b, u64 p) {
    u64 inv = powmod(b.back(), p - 2, p);
    while (!a.empty() && a.size() >= b.size()) {
        u64 c = mulmod(a.back(), inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - mulmod(c, b[i], p)) % p;
        trim_fp(a);
    }
    return a;
}

size_t fp_gcd_degree(Fp a, Fp b, u64 p) {
    trim_fp(a);
    trim_fp(b);
    while (!b.empty()) {
        Fp r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

u64 eval_fp(const Fp& f, u64 x, u64 p) {
    u64 acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
    return acc;
}

Integer eval_mod(const ZPoly& f, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (size_t i = f.size(); i-- > 0;) {
        acc = acc * x + f[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

// Numerator of f(a/b) * b^deg.
bool is_root(const ZPoly& f, const Integer& a, const Integer& b) {
    Integer acc = 0, bpow = 1;
    // Horner in homogeneous form: sum f_i a^i b^(d-i).
    for (size_t i = f.size(); i-- > 0;) {
        acc = acc * a + f[i] * bpow;
        bpow *= b;
    }
    return acc == 0;
}

// a/b with a = b*r mod m, |a|, |b| <= sqrt(m/2); false if none.
bool rational_reconstruct(const Integer& r, const Integer& m, Integer& a, Integer& b) {
    Integer bound;
    Integer half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    a = r1;
    b = t1;
    if (b < 0) { a = -a; b = -b; }
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g == 1;
}

// Squarefree part over Q via Euclid on rational polynomials.
ZPoly squarefree_part(const ZPoly& f) {
    using QPoly = std::vector<Rational>;
    auto to_q = [](const ZPoly& z) { return QPoly(z.begin(), z.end()); };
    auto qtrim = [](QPoly& q) { while (!q.empty() && q.back() == 0) q.pop_back(); };
    auto qmod = [&](QPoly a, const QPoly& b) {
        while (!a.empty() && a.size() >= b.size()) {
            Rational c = a.back() / b.back();
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
            a.pop_back();
            qtrim(a);
        }
        return a;
    };
    QPoly a = to_q(f), b = to_q(derivative(f));
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // f / gcd by long division.
    QPoly num = to_q(f), quo(num.size() - a.size() + 1);
    for (size_t k = quo.size(); k-- > 0;) {
        Rational c = num[k + a.size() - 1] / a.back();
        quo[k] = c;
        for (size_t i = 0; i < a.size(); ++i) num[k + i] -= c * a[i];
    }
    Integer den = 1;
    for (const auto& c : quo) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly out;
    for (const auto& c : quo) out.push_back(Rational(c * den).get_num());
    return primitive_part(out);
}

} // namespace

std::vector<Rational> rational_roots(const ZPoly& input) {
    ZPoly f = input;
    trim(f);
    if (f.empty()) fail("DomainError", "rational roots of the zero polynomial");
    std::set<Rational> roots;
    if (f[0] == 0) {
        roots.insert(Rational(0));
        size_t k = 0;
        while (f[k] == 0) ++k;
        f.erase(f.begin(), f.begin() + static_cast<long>(k));
    }
    f = primitive_part(f);
    long d = degree(f);
    if (d == 1) {
        Rational r(-f[0], f[1]);
        r.canonicalize();
        roots.insert(r);
    } else if (d >= 2) {
        bool tried_squarefree = false;
        for (;;) {
            u64 p = 0;
            for (unsigned long q : primes_up_to(20000)) {
                if (q < 3 || mpz_divisible_ui_p(f.back().get_mpz_t(), q)) continue;
                Fp fb = reduce(f, q);
                ZPoly df = derivative(f);
                Fp dfb = reduce(df, q);
                if (dfb.empty()) continue;
                if (fp_gcd_degree(fb, dfb, q) == 0) { p = q; break; }
            }
            if (p == 0) {
                if (tried_squarefree) fail("DomainError", "no squarefree reduction found");
                f = squarefree_part(f);
                tried_squarefree = true;
                if (degree(f) <= 1) {
                    for (const auto& r : rational_roots(f)) roots.insert(r);
                    break;
                }
                continue;
            }
            Integer bound = abs(f[0]) > abs(f.back()) ? abs(f[0]) : abs(f.back());
            Integer target = 2 * bound * bound;
            Integer modulus = p;
            while (modulus <= target) modulus *= p;
            Fp fb = reduce(f, p);
            ZPoly df = derivative(f);
            for (u64 r0 = 0; r0 < p; ++r0) {
                if (eval_fp(fb, r0, p) != 0) continue;
                Integer r = r0, pk = p;
                while (pk < modulus) {
                    pk = pk * pk;
                    if (pk > modulus) pk = modulus;
                    Integer fv = eval_mod(f, r, pk), dv = eval_mod(df, r, pk), inv;
                    mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), pk.get_mpz_t());
                    r = r - fv * inv;
                    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pk.get_mpz_t());
                }
                Integer a, b;
                if (rational_reconstruct(r, modulus, a, b) && is_root(f, a, b)) roots.insert(frac(a, b));
            }
            break;
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace ecp
