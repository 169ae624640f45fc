#include "ecpair/errors.hpp"
#include "ecpair/families.hpp"
#include "ecpair/pairing.hpp"
#include "ecpair/torsion.hpp"

#include <doctest.h>

using namespace ecp;

namespace {

TensorClass tc(long p, long num, long den) {
    TensorClass out;
    out.add_component(Integer(p), QmodZ(num, den));
    return out;
}

std::vector<Curve> sample_curves() {
    std::vector<Curve> out;
    for (const char* id : {"E4@t=2", "E5@t=3/2", "E6@t=-3", "E7@t=2", "E8@t=5/3", "E9@t=2", "E10@t=1/3",
                           "E12@t=-2/3", "E4x2@u=1/3", "E6x2@u=2", "E8x2@u=3", "E2@t=2,a=3", "E2@t=-1,a=-5",
                           "E3@t=2", "E3@a=7", "E2x2@u=3,a=5"})
        out.push_back(build_curve(FamilyId::parse(id)).curve);
    return out;
}

} // namespace

TEST_CASE("pairing examples") {
    Curve E(0, -3, 0, 2, 0);
    Point P = Point::affine(0, 0);
    CHECK(pairing_points(E, P, P) == tc(2, 1, 2));
    CHECK(pairing_points(E, P, Point::origin()).is_zero());
    Curve E4(1, 2, 2, 0, 0);
    CHECK(pairing_points(E4, P, P) == tc(2, 3, 4));
    CHECK_THROWS_AS(pairing_points(Curve(0, 0, 1, -1, 0), P, P), MathError);
}

TEST_CASE("Miller function of a two-torsion point") {
    Curve E(0, -3, 0, 2, 0);
    Point P = Point::affine(0, 0);
    FactoredFunction f = miller_function(E, P, 2);
    CHECK(ord_at(E, f, P) == 2);
    CHECK(ord_at(E, f, Point::origin()) == -2);
    CHECK(ord_at(E, f, Point::affine(1, 0)) == 0);
    CHECK(lc_at(E, f, P) == frac(1, 2));
    CHECK(miller_function(E, Point::origin(), 5).size() <= 1);
    CHECK_THROWS_AS(miller_function(E, P, 3), MathError);
}

TEST_CASE("Miller function divisor bookkeeping") {
    Curve E(2, 1, 1, 0, 0); // E_{5,1}
    Point P = Point::affine(0, 0);
    FactoredFunction f = miller_function(E, P, 5);
    CHECK(f.size() <= 8);
    CHECK(ord_at(E, f, P) == 5);
    CHECK(ord_at(E, f, Point::origin()) == -5);
    for (long k = 2; k <= 4; ++k) CHECK(ord_at(E, f, E.mul(P, k)) == 0);
}

TEST_CASE("symmetry and biadditivity over full torsion groups") {
    for (const auto& E : sample_curves()) {
        TorsionGroup G = torsion_subgroup(E);
        for (const auto& P : G.elements)
            for (const auto& Q : G.elements) {
                TensorClass pq = pairing_points(E, P, Q);
                CHECK(pq == pairing_points(E, Q, P));
                CHECK(pairing_points(E, E.add(P, G.gen1), Q) == pq + pairing_points(E, G.gen1, Q));
            }
    }
}

TEST_CASE("independent of the multiple of the order and of the uniformizer") {
    for (const auto& E : sample_curves()) {
        TorsionGroup G = torsion_subgroup(E);
        for (const auto& P : G.elements) {
            long n = E.order(P);
            for (const auto& Q : G.elements) {
                TensorClass v = pairing_points(E, P, Q);
                CHECK(pairing_points(E, P, Q, Uniformizer::Canonical, 2 * n) == v);
                CHECK(pairing_points(E, P, Q, Uniformizer::Alternate) == v);
            }
        }
    }
}

TEST_CASE("divisor pairing and class invariance under translation") {
    for (const auto& E : sample_curves()) {
        TorsionGroup G = torsion_subgroup(E);
        for (const auto& P : G.elements)
            for (const auto& Q : G.elements) {
                TensorClass v = pairing_points(E, P, Q);
                Divisor D{{P, 1}, {Point::origin(), -1}}, F{{Q, 1}, {Point::origin(), -1}};
                CHECK(pairing_divisors(E, D, F) == v);
                for (const auto& R : {G.gen1, G.gen2}) {
                    Divisor DR{{E.add(P, R), 1}, {R, -1}};
                    CHECK(pairing_divisors(E, DR, F) == v);
                    CHECK(pairing_translated(E, P, R, F) == v);
                }
            }
    }
}

TEST_CASE("principal divisors pair to zero") {
    Curve E(1, 2, 2, 0, 0);
    Point P = Point::affine(0, 0);
    Point P2 = E.mul(P, 2), P3 = E.mul(P, 3);
    // (P) + (2P) + (-3P) - 3(O) is the divisor of a line
    Divisor D{{P, 1}, {P2, 1}, {E.neg(P3), 1}, {Point::origin(), -3}};
    Divisor F{{P, 1}, {Point::origin(), -1}};
    CHECK(pairing_divisors(E, D, F).is_zero());
    Divisor bad{{P, 1}};
    CHECK_THROWS_AS(pairing_divisors(E, F, bad), MathError);
}

TEST_CASE("Weil pairing") {
    Curve E(0, -3, 0, 2, 0);
    Point P = Point::affine(0, 0), Q = Point::affine(1, 0);
    CHECK(weil_pairing(E, P, P, 2) == 1);
    CHECK(weil_pairing(E, P, Q, 2) == -1);
    CHECK(weil_pairing(E, P, Q, 2, WeilRoute::LeadingCoefficients) == -1);
    // every rational translate meets the supports on this curve
    CHECK_THROWS_AS(weil_pairing(E, P, Q, 2, WeilRoute::Translate), MathError);
    Curve F(1, 1, 1, -10, -10); // Z/4 x Z/2
    TorsionGroup G = torsion_subgroup(F);
    CHECK(weil_pairing(F, G.gen1, F.mul(G.gen1, 2), 4) == 1);
}

TEST_CASE("Frey-Rueck pairing") {
    Curve E(0, -3, 0, 2, 0);
    Point P = Point::affine(0, 0);
    CHECK(frey_ruck(E, P, P, 2).value() == 2);
    CHECK(frey_ruck(E, P, Point::origin(), 2).value() == 1);
    // <d, e> = Weil(d, e) <e, d> in Q^x / (Q^x)^n
    for (const auto& C : sample_curves()) {
        TorsionGroup G = torsion_subgroup(C);
        for (const auto& d : G.elements)
            for (const auto& e : G.elements) {
                if (!C.mul(d, 2).is_origin() || !C.mul(e, 2).is_origin()) continue;
                FactoredRational w = FactoredRational::from_rational(weil_pairing(C, d, e, 2));
                CHECK(frey_ruck(C, d, e, 2) == (w * frey_ruck(C, e, d, 2)).mod_powers(2));
            }
    }
}

TEST_CASE("support lies in the bad primes") {
    for (const auto& E : sample_curves()) {
        TorsionGroup G = torsion_subgroup(E);
        for (const auto& P : G.elements)
            for (const auto& Q : G.elements)
                for (const auto& p : pairing_points(E, P, Q).support()) CHECK(divides_integral_discriminant(E, p));
    }
}

TEST_CASE("Gram matrix and intrinsic subgroup") {
    Curve E(0, -3, 0, 2, 0);
    TorsionGroup G = group_from_generators(E, Point::affine(0, 0), Point::affine(1, 0));
    Gram g = gram_matrix(E, G);
    REQUIRE(g.entries.size() == 2);
    CHECK(g.entries[0][0] == tc(2, 1, 2));
    CHECK(g.entries[0][1].is_zero());
    CHECK(g.entries[1][1].is_zero());
    auto B = intrinsic_subgroup(g, G);
    REQUIRE(B.size() == 2);
    CHECK(G.element(B[1].first, B[1].second) == Point::affine(1, 0));
    CHECK(gram_pairing(g, G, {1, 1}, {1, 0}) == tc(2, 1, 2));
}
