#include "ecpair/local.hpp"

#include "ecpair/errors.hpp"

#include <algorithm>

namespace ecp {

Laurent operator+(const Laurent& a, const Laurent& b) {
    long lo = std::min(a.val, b.val);
    long hi = std::min(a.precision(), b.precision());
    Laurent out;
    out.val = lo;
    out.c.assign(static_cast<size_t>(std::max(0L, hi - lo)), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        long e = a.val + static_cast<long>(i);
        if (e < hi) out.c[static_cast<size_t>(e - lo)] += a.c[i];
    }
    for (size_t i = 0; i < b.c.size(); ++i) {
        long e = b.val + static_cast<long>(i);
        if (e < hi) out.c[static_cast<size_t>(e - lo)] += b.c[i];
    }
    return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    out.val = a.val + b.val;
    size_t n = std::min(a.c.size(), b.c.size());
    out.c.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

Laurent operator*(const Rational& k, const Laurent& a) {
    Laurent out = a;
    for (auto& x : out.c) x *= k;
    return out;
}

Laurent normalized(const Laurent& a) {
    size_t i = 0;
    while (i < a.c.size() && a.c[i] == 0) ++i;
    if (i == a.c.size()) fail("PrecisionExhausted", "series vanishes to the known precision");
    Laurent out;
    out.val = a.val + static_cast<long>(i);
    out.c.assign(a.c.begin() + static_cast<long>(i), a.c.end());
    return out;
}

Laurent inverse(const Laurent& input) {
    Laurent a = normalized(input);
    Laurent out;
    out.val = -a.val;
    size_t n = a.c.size();
    out.c.assign(n, Rational(0));
    Rational inv0 = 1 / a.c[0];
    out.c[0] = inv0;
    for (size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (size_t i = 1; i <= k; ++i) s += a.c[i] * out.c[k - i];
        out.c[k] = -s * inv0;
    }
    return out;
}

namespace {

Laurent constant(const Rational& v, long terms) {
    Laurent out;
    out.c.assign(static_cast<size_t>(terms), Rational(0));
    out.c[0] = v;
    return out;
}

Laurent truncate(Laurent a, long terms) {
    if (static_cast<long>(a.c.size()) > terms) a.c.resize(static_cast<size_t>(terms));
    return a;
}

// F(X, Y) with truncated series arithmetic.
Laurent equation_series(const Curve& E, const Laurent& X, const Laurent& Y) {
    Laurent X2 = X * X;
    Laurent out = Y * Y;
    out = out + E.a1() * (X * Y);
    out = out + E.a3() * Y;
    out = out + Rational(-1) * (X2 * X);
    out = out + (-E.a2()) * X2;
    out = out + (-E.a4()) * X;
    Laurent c = constant(-E.a6(), static_cast<long>(X.c.size()));
    return out + c;
}

// Solve F(known, unknown) = 0 for the unknown coordinate by successive
// coefficient correction; `deriv` is dF/d(unknown) at Q.
Laurent solve_coordinate(const Curve& E, const Laurent& known, Rational start, const Rational& deriv,
                         bool unknown_is_y, long terms) {
    Laurent S = constant(start, terms);
    for (long k = 1; k < terms; ++k) {
        Laurent R = unknown_is_y ? equation_series(E, known, S) : equation_series(E, S, known);
        S.c[static_cast<size_t>(k)] -= R.c[static_cast<size_t>(k)] / deriv;
    }
    return S;
}

// Substitute pi = pi' * B(pi') into L, where `pi_series` holds pi as a
// series in pi' (val 1, leading coefficient nonzero).
Laurent compose(const Laurent& L, const Laurent& pi_series, long terms) {
    Laurent B = pi_series;
    B.val = 0;
    Laurent Bpow = constant(1, terms);
    const Laurent step = L.val >= 0 ? B : inverse(B);
    for (long i = 0; i < (L.val >= 0 ? L.val : -L.val); ++i) Bpow = Bpow * step;
    Laurent acc = constant(0, terms);
    for (size_t i = L.c.size(); i-- > 0;) acc = truncate(acc * pi_series + constant(L.c[i], terms), terms);
    Laurent out = truncate(acc * Bpow, terms);
    out.val += L.val;
    return out;
}

LocalExpansion canonical(const Curve& E, const Point& Q, long terms) {
    LocalExpansion out;
    if (Q.is_origin()) {
        // nu = 1/y as a power series in pi = x/y, from
        // nu = pi^3 - a1 pi nu + a2 pi^2 nu - a3 nu^2 + a4 pi nu^2 + a6 nu^3.
        const long n = terms + 3;
        Laurent pi = constant(0, n);
        pi.c[1] = 1;
        Laurent pi3 = constant(0, n);
        pi3.c[3] = 1;
        Laurent nu = pi3;
        for (long it = 0; it < n; ++it) {
            Laurent nu2 = nu * nu;
            Laurent next = pi3;
            next = next + (-E.a1()) * (pi * nu);
            next = next + E.a2() * (pi * pi * nu);
            next = next + (-E.a3()) * nu2;
            next = next + E.a4() * (pi * nu2);
            next = next + E.a6() * (nu2 * nu);
            nu = next;
        }
        Laurent w;
        w.c.assign(nu.c.begin() + 3, nu.c.end());
        Laurent winv = truncate(inverse(w), terms);
        out.x = winv;
        out.x.val = -2;
        out.y = winv;
        out.y.val = -3;
        return out;
    }
    Rational Fy = E.dF_dy(Q);
    if (Fy != 0) {
        Laurent X = constant(Q.x, terms);
        X.c[1] = 1;
        out.x = X;
        out.y = solve_coordinate(E, X, Q.y, Fy, true, terms);
    } else {
        Laurent Y = constant(Q.y, terms);
        Y.c[1] = 1;
        out.y = Y;
        out.x = solve_coordinate(E, Y, Q.x, E.dF_dx(Q), false, terms);
    }
    return out;
}

} // namespace

LocalExpansion local_expansion(const Curve& E, const Point& Q, Uniformizer u, long terms) {
    if (!E.contains(Q)) fail("DomainError", "point not on curve: " + Q.str());
    if (terms < 2) terms = 2;
    LocalExpansion base = canonical(E, Q, terms);
    if (u == Uniformizer::Canonical) return base;
    // pi' = 2 pi + pi^2; invert to pi = pi'/2 - pi^2/2 by iteration.
    Laurent pi = constant(0, terms);
    for (long it = 0; it < terms; ++it) {
        Laurent next = constant(0, terms);
        next.c[1] = Rational(1, 2);
        pi = next + Rational(-1, 2) * (pi * pi);
    }
    Laurent pi_series;
    pi_series.val = 1;
    pi_series.c.assign(pi.c.begin() + 1, pi.c.end());
    LocalExpansion out;
    out.x = compose(base.x, pi_series, terms);
    out.y = compose(base.y, pi_series, terms);
    return out;
}

} // namespace ecp
