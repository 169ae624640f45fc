#include "ecpair/errors.hpp"
#include "ecpair/pairing.hpp"

#include <algorithm>
#include <set>

namespace ecp {

namespace {

constexpr long kTerms = 10;

LocalValue from_series(const Laurent& s) {
    Laurent n = normalized(s);
    return {n.val, n.c[0]};
}

Laurent line_series(const LineFactor& g, const LocalExpansion& ex) {
    Laurent out = g.beta * ex.x + g.gamma * ex.y;
    Laurent c;
    c.c.assign(ex.x.c.size() + 4, Rational(0));
    c.c[0] = g.alpha;
    return out + c;
}

Laurent divide(const Laurent& a, const Laurent& b) { return a * inverse(b); }

Laurent constant_series(const Rational& v, long terms) {
    Laurent c;
    c.c.assign(static_cast<size_t>(terms), Rational(0));
    c.c[0] = v;
    return c;
}

// Expansion at Q of the coordinates of X + R, for X near Q.
LocalExpansion translated(const Curve& E, const Point& Q, const Point& R, Uniformizer u) {
    LocalExpansion ex = local_expansion(E, Q, u, kTerms + 6);
    if (R.is_origin()) return ex;
    Laurent dx = ex.x + constant_series(-R.x, kTerms + 6);
    Laurent dy = ex.y + constant_series(-R.y, kTerms + 6);
    Laurent lambda = divide(dy, dx);
    Laurent nu = ex.y + Rational(-1) * (lambda * ex.x);
    Laurent x3 = lambda * lambda + E.a1() * lambda;
    x3 = x3 + Rational(-1) * ex.x;
    x3 = x3 + constant_series(-E.a2() - R.x, kTerms + 6);
    Laurent y3 = Rational(-1) * ((lambda + constant_series(E.a1(), kTerms + 6)) * x3);
    y3 = y3 + Rational(-1) * nu;
    y3 = y3 + constant_series(-E.a3(), kTerms + 6);
    return {x3, y3};
}

Rational value_at(const Curve& E, const FactoredFunction& f, const Point& X) {
    if (ord_at(E, f, X) != 0) fail("DomainError", "function has a zero or pole at " + X.str());
    return lc_at(E, f, X);
}

} // namespace

LocalValue local_value(const Curve& E, const LineFactor& g, const Point& Q, Uniformizer u) {
    if (g.beta == 0 && g.gamma == 0) return {0, g.alpha};
    if (u == Uniformizer::Canonical) {
        if (Q.is_origin()) {
            if (g.gamma != 0) return {-3, g.gamma};
            return {-2, g.beta};
        }
        Rational v = g.at(Q);
        if (v != 0) return {0, v};
    }
    return from_series(line_series(g, local_expansion(E, Q, u, kTerms)));
}

long ord_at(const Curve& E, const FactoredFunction& f, const Point& Q) {
    long ord = 0;
    for (const auto& [key, e] : f.factors()) ord += e * local_value(E, factor_of(key), Q).ord;
    return ord;
}

Rational lc_at(const Curve& E, const FactoredFunction& f, const Point& Q, Uniformizer u) {
    Rational lc = 1;
    for (const auto& [key, e] : f.factors()) lc *= rpow(local_value(E, factor_of(key), Q, u).lc, e);
    return lc;
}

TensorClass lc_tensor(const Curve& E, const FactoredFunction& f, const Point& Q, const QmodZ& r, Uniformizer u) {
    TensorClass out;
    for (const auto& [key, e] : f.factors()) {
        Rational lc = local_value(E, factor_of(key), Q, u).lc;
        out += tensor_of(lc, r * e);
    }
    return out;
}

TensorClass pairing_points(const Curve& E, const Point& P, const Point& Q, Uniformizer u, long n) {
    if (!E.contains(P) || !E.contains(Q)) fail("DomainError", "point not on curve");
    if (n == 0) {
        n = E.order(P);
        if (n == 0) fail("NonTorsion", P.str() + " has no finite order <= 12");
    }
    if (P.is_origin() || Q.is_origin()) return {};
    FactoredFunction f = miller_function(E, P, n);
    QmodZ r(1, n);
    return lc_tensor(E, f, Q, r, u) - lc_tensor(E, f, Point::origin(), r, u);
}

DivisorReduction reduce_divisor(const Curve& E, const Divisor& D) {
    DivisorReduction out;
    out.S = Point::origin();
    long degree = 0;
    for (const auto& [P, m] : D) {
        if (!E.contains(P)) fail("DomainError", "point not on curve: " + P.str());
        degree += m;
        if (P.is_origin() || m == 0) continue;
        // m copies of (P) - (O); negative m via (-P) - (O) - div(x - x_P).
        Point add = P;
        if (m < 0) {
            out.h.multiply(LineFactor::vertical(P.x), m);
            add = E.neg(P);
        }
        for (long k = 0; k < std::abs(m); ++k) {
            Point before = out.S;
            if (before.is_origin()) { out.S = add; continue; }
            FactoredFunction step;
            if (before.x == add.x && before.y + add.y + E.a1() * add.x + E.a3() == 0) {
                step.multiply(LineFactor::vertical(add.x), 1);
                out.S = Point::origin();
            } else {
                Rational lambda;
                if (before.x == add.x)
                    lambda = (3 * add.x * add.x + 2 * E.a2() * add.x + E.a4() - E.a1() * add.y) / E.dF_dy(add);
                else
                    lambda = (add.y - before.y) / (add.x - before.x);
                step.multiply(LineFactor::line(lambda, before.y - lambda * before.x), 1);
                out.S = E.add(before, add);
                if (!out.S.is_origin()) step.multiply(LineFactor::vertical(out.S.x), -1);
            }
            // (before) + (add) - 2(O) = (S) - (O) + div(step)
            out.h *= step;
        }
    }
    if (degree != 0) fail("NonTorsionClass", "divisor of nonzero degree has no torsion class");
    return out;
}

TensorClass pairing_divisors(const Curve& E, const Divisor& D, const Divisor& F) {
    long degF = 0;
    for (const auto& [Q, m] : F) {
        if (!E.contains(Q)) fail("DomainError", "point not on curve: " + Q.str());
        degF += m;
    }
    if (degF != 0) fail("NonZeroDegree", "second divisor has nonzero degree");
    DivisorReduction red = reduce_divisor(E, D);
    long n = E.order(red.S);
    if (n == 0) fail("NonTorsionClass", "class of D is " + red.S.str() + ", not torsion");
    FactoredFunction f = miller_function(E, red.S, n);
    f *= red.h.pow(n);
    TensorClass out;
    for (const auto& [Q, m] : F) out += lc_tensor(E, f, Q, QmodZ(m, n));
    return out;
}

TensorClass pairing_translated(const Curve& E, const Point& P, const Point& R, const Divisor& F) {
    long n = E.order(P);
    if (n == 0) fail("NonTorsion", P.str() + " has no finite order <= 12");
    if (!E.contains(R)) fail("DomainError", "point not on curve: " + R.str());
    long degF = 0;
    for (const auto& kv : F) degF += kv.second;
    if (degF != 0) fail("NonZeroDegree", "second divisor has nonzero degree");
    FactoredFunction f = miller_function(E, P, n);
    Point minusR = E.neg(R);
    TensorClass out;
    for (const auto& [Q, m] : F) {
        LocalExpansion ex = translated(E, Q, minusR, Uniformizer::Canonical);
        for (const auto& [key, e] : f.factors()) {
            LocalValue v = from_series(line_series(factor_of(key), ex));
            out += tensor_of(v.lc, QmodZ(m * e, n));
        }
    }
    return out;
}

Rational weil_pairing(const Curve& E, const Point& P, const Point& Q, long n, WeilRoute route,
                      const TorsionGroup* group) {
    if (!E.mul(P, n).is_origin() || !E.mul(Q, n).is_origin())
        fail("NotAnnihilated", "Weil pairing needs n-torsion points");
    if (P.is_origin() || Q.is_origin()) return 1;
    FactoredFunction f = miller_function(E, P, n);
    FactoredFunction g = miller_function(E, Q, n);
    Rational value;
    bool done = false;
    if (route != WeilRoute::LeadingCoefficients) {
        TorsionGroup local;
        if (!group) {
            local = torsion_subgroup(E);
            group = &local;
        }
        std::set<Point> banned{Point::origin(), P, E.neg(Q), E.sub(P, Q)};
        for (const auto& T : group->elements) {
            if (banned.count(T)) continue;
            // [f(Q+T)/f(T)] / [g(P-T)/g(-T)]
            value = value_at(E, f, E.add(Q, T)) / value_at(E, f, T);
            value /= value_at(E, g, E.sub(P, T)) / value_at(E, g, E.neg(T));
            done = true;
            break;
        }
        if (!done && route == WeilRoute::Translate)
            fail("NoAuxiliaryPoint", "no rational torsion translate separates the supports");
    }
    if (!done) {
        // prod_x (-1)^(n d e) lc_x(f)^e / lc_x(g)^d over the supports of
        // D = (P) - (O) and F = (Q) - (O).
        std::map<Point, std::pair<long, long>> mult; // point -> (d, e)
        mult[P].first += 1;
        mult[Point::origin()].first -= 1;
        mult[Q].second += 1;
        mult[Point::origin()].second -= 1;
        value = 1;
        for (const auto& [X, de] : mult) {
            auto [d, e] = de;
            if ((n * d * e) % 2 != 0) value = -value;
            value *= rpow(lc_at(E, f, X), e) / rpow(lc_at(E, g, X), d);
        }
    }
    if (value != 1 && value != -1) fail("DomainError", "Weil pairing value " + to_string(value) + " is not +-1");
    return value;
}

FactoredRational frey_ruck(const Curve& E, const Point& P, const Point& Q, long n) {
    if (!E.mul(P, n).is_origin()) fail("NotAnnihilated", "Frey-Rueck pairing needs nP = O");
    FactoredRational out;
    if (P.is_origin() || Q.is_origin()) return out;
    FactoredFunction f = miller_function(E, P, n);
    for (const auto& [key, e] : f.factors()) {
        LineFactor g = factor_of(key);
        out *= FactoredRational::from_rational(local_value(E, g, Q).lc).pow(e);
        out *= FactoredRational::from_rational(local_value(E, g, Point::origin()).lc).pow(-e);
    }
    return out.mod_powers(n);
}

Gram gram_matrix(const Curve& E, const TorsionGroup& G) {
    std::vector<Point> gens;
    if (G.d1 > 1) gens.push_back(G.gen1);
    if (G.d2 > 1) gens.push_back(G.gen2);
    Gram out;
    out.entries.assign(gens.size(), std::vector<TensorClass>(gens.size()));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) out.entries[i][j] = pairing_points(E, gens[i], gens[j]);
    return out;
}

TensorClass gram_pairing(const Gram& gram, const TorsionGroup&, std::pair<long, long> a, std::pair<long, long> b) {
    long av[2] = {a.first, a.second}, bv[2] = {b.first, b.second};
    TensorClass out;
    size_t r = gram.entries.size();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) out += gram.entries[i][j] * (av[i] * bv[j]);
    return out;
}

std::vector<std::pair<long, long>> intrinsic_subgroup(const Gram& gram, const TorsionGroup& G) {
    std::vector<std::pair<long, long>> out;
    for (long j = 0; j < G.d2; ++j)
        for (long i = 0; i < G.d1; ++i) {
            bool orthogonal = gram_pairing(gram, G, {i, j}, {1, 0}).is_zero() &&
                              (G.d2 == 1 || gram_pairing(gram, G, {i, j}, {0, 1}).is_zero());
            if (orthogonal) out.emplace_back(i, j);
        }
    return out;
}

std::vector<Integer> bad_prime_superset(const Curve& E) {
    IntegralModel M = integral_model(E);
    std::vector<Integer> out;
    for (const auto& kv : factor_integer(M.curve.invariants().disc.get_num())) out.push_back(kv.first);
    return out;
}

bool divides_integral_discriminant(const Curve& E, const Integer& p) {
    IntegralModel M = integral_model(E);
    return mpz_divisible_p(M.curve.invariants().disc.get_num().get_mpz_t(), p.get_mpz_t());
}

} // namespace ecp
