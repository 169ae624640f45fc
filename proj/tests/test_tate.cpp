#include "ecpair/census.hpp"
#include "ecpair/errors.hpp"
#include "ecpair/families.hpp"
#include "ecpair/tate.hpp"

#include <doctest.h>

using namespace ecp;

TEST_CASE("s-values") {
    CHECK(s_m_of(TateData::make(5, 25), 5, 2) == 1);
    CHECK(s_m_of(TateData::make(5, 25), -1, 2) == 0);
    CHECK(s_m_of(TateData::make(7, 7 * 7 * 7 * 7), -1, 2) == 0);
    CHECK_THROWS_AS(s_m_of(TateData::make(5, 625), 5, 2), MathError);
    CHECK_THROWS_AS(s_m_of(TateData::make(5, 25), 2, 2), MathError);   // 4 / 25 is not a power of q
    CHECK_THROWS_AS(s_m_of(TateData::make(5, 25), 5, 5), MathError);   // p | m
    CHECK_THROWS_AS(TateData::make(6, 36), MathError);
    CHECK_THROWS_AS(TateData::make(5, frac(1, 5)), MathError);
}

TEST_CASE("pairing valuation") {
    CHECK(tate_pairing_valuation(2, 1, 1, 2) == QmodZ(1, 2));
    CHECK(tate_pairing_valuation(5, 0, 3, 7).is_zero());
    CHECK(tate_pairing_valuation(3, 1, 1, 9).is_zero());
}

TEST_CASE("pairing on rational representatives") {
    TateData T = TateData::make(3, 9);
    TensorClass v = tate_pairing_rational(T, 3, 3, 2);
    TensorClass expect;
    expect.add_component(3, QmodZ(1, 2));
    CHECK(v == expect);
    CHECK(v.component(3) == tate_pairing_valuation(2, 1, 1, 2));
    CHECK(tate_pairing_rational(T, 3, -1, 2).is_zero());
    CHECK(tate_pairing_three_way(T, 3, 3, 2).consistent());
}

TEST_CASE("local power test") {
    CHECK(is_mth_power_local(TateData::make(5, 5), 4, 2));
    CHECK_FALSE(is_mth_power_local(TateData::make(5, 5), 2, 2));
    CHECK_FALSE(is_mth_power_local(TateData::make(7, 7), 7, 2));
    CHECK(is_mth_power_local(TateData::make(7, 7), 7 * 7 * 7 * 2, 3) == false);
    CHECK(is_mth_power_local(TateData::make(7, 7), 343 * 6, 3)); // 6 = (-1)^3 * (-6); -6 = 1 mod 7
}

TEST_CASE("intrinsic order") {
    CHECK(intrinsic_order_local(TateData::make(5, 125), 3) == 3);
    CHECK(intrinsic_order_local(TateData::make(7, 7), 2) == 1);
    CHECK(intrinsic_order_local(TateData::make(5, 50), 2) == 1);
    // m_T times the least nu with q^nu an m-th power is m
    for (long p : {5, 7, 11})
        for (long n = 1; n <= 6; ++n)
            for (long u : {1, 2, 3})
                for (long m = 2; m <= 8; ++m) {
                    if (m % p == 0) continue;
                    TateData T = TateData::make(p, Rational(u) * rpow(Rational(p), n));
                    long nu = 1;
                    while (!is_mth_power_local(T, rpow(T.q, nu), m)) ++nu;
                    CHECK(intrinsic_order_local(T, m) * nu == m);
                }
}

TEST_CASE("exact sequence and three-way consistency on a grid") {
    for (long p : {5, 7})
        for (long n = 1; n <= 8; ++n)
            for (long u : {1, 2})
                for (long m = 2; m <= 6; ++m) {
                    if (m % p == 0) continue;
                    TateData T = TateData::make(p, Rational(u) * rpow(Rational(p), n));
                    CHECK(s_m_image(T, m) == delta_kernel(T, m));
                    auto reps = m_torsion_representatives(T, m);
                    for (const auto& [c, a] : reps)
                        for (const auto& [c2, b] : reps) CHECK(tate_pairing_three_way(T, a, b, m).consistent());
                }
}

TEST_CASE("Kodaira check") {
    CHECK_THROWS_AS(kodaira_check(Curve(0, -1, 1, -10, -20), 3, 5), MathError);
    CHECK_THROWS_AS(kodaira_check(Curve(0, -1, 1, -10, -20), 11, 11), MathError);
    // 11a3 has an intrinsic point of order 5 but 5 | 11 - 1
    auto r = kodaira_check(build_curve(FamilyId::parse("E5@t=-1")).curve, 11, 5);
    CHECK(r.outcome == KodairaOutcome::NotApplicable);
    for (const char* fam : {"E4", "E5", "E6", "E8", "E9", "E12", "E4x2"})
        for (const auto& id : census_parameters(fam, 6))
            for (long p = 5; p <= 60; ++p) {
                if (!is_certified_prime(Integer(p))) continue;
                for (long m : {2, 3, 4, 5, 6}) {
                    if (m % p == 0) continue;
                    auto k = kodaira_check(build_curve(id).curve, p, m);
                    CHECK(k.outcome != KodairaOutcome::Fail);
                }
            }
    // t / (1 + t) = c^3 makes P intrinsic on E_{3,t}; c = 5 gives I_9 at 5
    auto k3 = kodaira_check(build_curve(FamilyId::parse("E3@t=-125/124")).curve, 5, 3);
    CHECK(k3.outcome == KodairaOutcome::Pass);
    CHECK(k3.n == 9);
    // f_5(t) = t = 7^5 gives I_25 at 7
    auto k5 = kodaira_check(build_curve(FamilyId::parse("E5@t=16807")).curve, 7, 5);
    CHECK(k5.outcome == KodairaOutcome::Pass);
    CHECK(k5.n == 25);
    CHECK(to_string(KodairaOutcome::Pass) == "Pass");
}
