#include "ecpair/errors.hpp"
#include "ecpair/families.hpp"
#include "ecpair/pairing.hpp"
#include "ecpair/torsion.hpp"
#include "ecpair/universal_check.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ecp;

namespace {

TensorClass neg_tensor(const Rational& z, long N) { return -tensor_of(z, QmodZ(1, N)); }

} // namespace

TEST_CASE("family id grammar") {
    for (const char* s : {"E4@t=3", "E12@t=-2/3", "E4x2@u=1", "E2@t=2,a=3", "E3@t=5", "E3@a=7", "E2x2@u=2,a=1",
                          "E2@t=-1,a=3"}) {
        FamilyId id = FamilyId::parse(s);
        CHECK(FamilyId::parse(id.str()).str() == id.str());
    }
    for (const char* bad : {"E11@t=1", "E4@u=1", "E5x2@u=1", "E4@t=", "F4@t=1", "E2@t=1"})
        CHECK_THROWS_AS(FamilyId::parse(bad), MathError);
}

TEST_CASE("family construction examples") {
    auto c4 = build_curve(FamilyId::parse("E4@t=3"));
    CHECK(c4.curve == Curve(1, 3, 3, 0, 0));
    CHECK(c4.P == Point::affine(0, 0));
    CHECK(oracle::order(c4.curve, c4.P) == 4);

    // u = 1 gives b = 1/16, where the discriminant t^4 (1 - 16t) vanishes
    CHECK_THROWS_AS(build_curve(FamilyId::parse("E4x2@u=1")), MathError);
    CHECK_THROWS_AS(Curve(1, frac(1, 16), frac(1, 16), 0, 0), MathError);
    auto b4 = build_curve(FamilyId::parse("E4x2@u=2"));
    CHECK(b4.curve.a2() == frac(1, 18));
    REQUIRE(b4.Q);
    CHECK(b4.curve.contains(*b4.Q));
    CHECK(oracle::order(b4.curve, *b4.Q) == 2);

    auto e2 = build_curve(FamilyId::parse("E2x2@u=2,a=1"));
    CHECK(e2.curve == Curve(0, -3, 0, 2, 0));
    CHECK(e2.P == Point::affine(0, 0));
    CHECK(*e2.Q == Point::affine(1, 0));

    CHECK_THROWS_AS(build_curve(FamilyId::parse("E4x2@u=0")), MathError);
    CHECK_THROWS_AS(build_curve(FamilyId::parse("E4x2@u=-1")), MathError);
    CHECK_THROWS_AS(build_curve(FamilyId::parse("E5@t=0")), MathError);
}

TEST_CASE("marked points have the family order") {
    for (int N : cyclic_orders())
        for (const char* t : {"2", "-3", "5/7", "-4/9"}) {
            FamilyId id = FamilyId::parse("E" + std::to_string(N) + "@t=" + t);
            if (is_degenerate(id)) continue;
            auto fc = build_curve(id);
            CHECK(oracle::order(fc.curve, fc.P) == N);
        }
    for (int N : bicyclic_orders())
        for (const char* u : {"2", "1/3", "-5/2"}) {
            FamilyId id = FamilyId::parse("E" + std::to_string(N) + "x2@u=" + u);
            if (is_degenerate(id)) continue;
            auto fc = build_curve(id);
            CHECK(oracle::order(fc.curve, fc.P) == N);
            CHECK(oracle::order(fc.curve, *fc.Q) == 2);
            CHECK(fc.curve.mul(fc.P, N / 2) != *fc.Q);
        }
}

TEST_CASE("predicted pairings, printed examples") {
    CHECK(predicted_pairings(FamilyId::parse("E6@t=2")).PP == neg_tensor(2, 6));
    auto b6 = predicted_pairings(FamilyId::parse("E6x2@u=2"));
    CHECK(*b6.QQ == tensor_of(105, QmodZ(1, 2)));
    CHECK(predicted_pairings(FamilyId::parse("E2@t=1,a=3")).PP == tensor_of(2, QmodZ(1, 2)));
    CHECK(predicted_pairings(FamilyId::parse("E4@t=2")).PP == neg_tensor(2, 4));
    CHECK(predicted_pairings(FamilyId::parse("E2x2@u=2,a=1")).PP == tensor_of(2, QmodZ(1, 2)));
}

TEST_CASE("order three sign is frozen") {
    // <P, P> = -(t (1 + t)^2 (x) 1/3) on E_{3,t}; -(a (x) 1/3) on E_{3,-1,a}
    for (long t : {2, 5, -7}) {
        Rational T = t;
        FamilyId id = FamilyId::parse("E3@t=" + std::to_string(t));
        auto fc = build_curve(id);
        TensorClass expect = neg_tensor(T * (1 + T) * (1 + T), 3);
        CHECK(pairing_points(fc.curve, fc.P, fc.P) == expect);
        CHECK(predicted_pairings(id).PP == expect);
    }
    auto fa = build_curve(FamilyId::parse("E3@a=7"));
    CHECK(pairing_points(fa.curve, fa.P, fa.P) == neg_tensor(7, 3));
}

TEST_CASE("oracle agrees with the closed forms on every family") {
    for (const char* fam : {"E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9", "E10", "E12", "E2x2", "E4x2", "E6x2",
                            "E8x2"}) {
        CAPTURE(fam);
        UniversalReport r = verify_universal(fam, 25, 12, 3);
        CHECK(r.checked == 25);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("j-invariants") {
    CHECK(family_j(FamilyId::parse("E2@t=-1,a=3")) == 1728);
    CHECK(family_j(FamilyId::parse("E3@a=5")) == 0);
    CHECK(family_j(FamilyId::parse("E2x2@u=2,a=7")) == 1728);
    for (const char* s : {"E2@t=3,a=5", "E2@t=-2/7,a=-1", "E3@t=2/3", "E5@t=7", "E7@t=-3/2", "E9@t=4", "E12@t=2/5",
                          "E4x2@u=3", "E8x2@u=-2/3", "E2x2@u=5,a=2"}) {
        FamilyId id = FamilyId::parse(s);
        CHECK(family_j(id) == build_curve(id).curve.invariants().j);
    }
}

TEST_CASE("parameter recognition round trips") {
    CHECK(recognize_parameter(build_curve(FamilyId::parse("E5@t=7")).curve, Point::affine(0, 0)) == 7);
    CHECK(recognize_parameter(build_curve(FamilyId::parse("E8@t=2")).curve, Point::affine(0, 0)) == 2);
    for (int N : cyclic_orders())
        for (const char* t : {"3", "-2/5", "7/4"}) {
            FamilyId id = FamilyId::parse("E" + std::to_string(N) + "@t=" + t);
            if (is_degenerate(id)) continue;
            auto fc = build_curve(id);
            // a change of model must not matter
            Transform T;
            T.u = 3;
            T.r = frac(1, 2);
            T.s = -1;
            T.t = 4;
            CHECK(recognize_parameter(T.apply(fc.curve), T.forward(fc.P)) == id.param);
        }
    for (int N : bicyclic_orders())
        for (const char* u : {"3", "2/7"}) {
            FamilyId id = FamilyId::parse("E" + std::to_string(N) + "x2@u=" + u);
            auto fc = build_curve(id);
            CHECK(recognize_bicyclic_parameter(fc.curve, fc.P, *fc.Q) == id.param);
        }
    CHECK_THROWS_AS(recognize_parameter(Curve(0, 0, 1, 0, 0), Point::affine(0, 0)), MathError);
}

TEST_CASE("rational function tables") {
    CHECK(f_table(5).eval(2) == 2);
    CHECK(f_table(6).eval(2) == 2);
    CHECK(g_table(6, 2).eval(2) == 105);
    CHECK(g_table(4, 2).eval(3) == -8);
    CHECK(t_of_u_table(2).eval(3) == frac(4 * 3, 4));
    CHECK_THROWS_AS(tate_b_table(8).eval(-1), MathError);
}

TEST_CASE("sampling is deterministic") {
    auto a = sample_parameters("E7", 20, 15, 42), b = sample_parameters("E7", 20, 15, 42);
    REQUIRE(a.size() == 20);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].str() == b[i].str());
}
