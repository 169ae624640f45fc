#include "ecpair/cyclotomic.hpp"
#include "ecpair/errors.hpp"
#include "ecpair/hauptmodul.hpp"
#include "ecpair/qseries.hpp"

#include <doctest.h>

using namespace ecp;

namespace {

// prod_{n >= 1} (1 - q^(s n))^e as integer coefficients up to q^K.
std::vector<Integer> eta_product(long s, long e, long K) {
    std::vector<Integer> c(K + 1);
    c[0] = 1;
    for (long n = s; n <= K; n += s) {
        for (long r = 0; r < std::labs(e); ++r) {
            if (e > 0)
                for (long k = K; k >= n; --k) c[k] -= c[k - n];
            else
                for (long k = n; k <= K; ++k) c[k] += c[k - n];
        }
    }
    return c;
}

std::vector<Integer> mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Rational rat(const CycloElem& c) {
    REQUIRE(c.is_rational());
    return c.coeffs().empty() ? Rational(0) : c.coeffs()[0];
}

} // namespace

TEST_CASE("cyclotomic arithmetic") {
    CHECK(cyclotomic_polynomial(12) == ZPoly{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CycloElem z = CycloElem::zeta(5, 1);
    CHECK(z.pow(5) == CycloElem(5, 1));
    CycloElem one_minus = CycloElem(5, 1) - z;
    CHECK(one_minus.norm() == 5);
    CHECK(one_minus * one_minus.inverse() == CycloElem(5, 1));
    CHECK(CycloElem::zeta(12, 3).pow(2) == CycloElem(12, -1));
    CHECK(z.embed(10) == CycloElem::zeta(10, 2));
    CHECK_THROWS_AS(CycloElem(7).inverse(), MathError);
}

TEST_CASE("eta series") {
    QSeries e = eta_series(3);
    CHECK(e.offset() == frac(1, 24));
    CHECK(rat(e.coefficient(frac(1, 24))) == 1);
    CHECK(rat(e.coefficient(frac(25, 24))) == -1);
    CHECK(rat(e.coefficient(frac(49, 24))) == -1);
    CHECK_THROWS_AS(e.coefficient(frac(1, 24) + 3), MathError);

    const long K = 80;
    QSeries big = eta_series(K);
    auto ref = eta_product(1, 1, K - 1);
    for (long k = 0; k < K; ++k) CHECK(rat(big.coefficient(frac(1, 24) + k)) == ref[k]);
    CHECK(rat(big.coefficient(frac(1, 24) + 5)) == 1); // pentagonal number 5

    QSeries e2 = eta_series(10).dilate(2);
    CHECK(e2.offset() == frac(1, 12));
    CHECK(rat(e2.coefficient(frac(1, 12) + 2)) == -1);
    CHECK(rat(e2.coefficient(frac(1, 12) + 4)) == -1);
    CHECK(rat(e2.coefficient(frac(1, 12) + 1)) == 0);
}

TEST_CASE("series arithmetic") {
    QSeries a = QSeries::monomial(frac(1, 12));
    CHECK((a * a).leading_exponent() == frac(1, 6));
    // (1 - q)^(-1)
    QSeries one_minus_q = QSeries::constant(1) - QSeries::monomial(1);
    QSeries geo = one_minus_q.truncate(30).inverse();
    for (long k = 0; k < 25; ++k) CHECK(rat(geo.coefficient(k)) == 1);
    QSeries t = hauptmodul_series("t5", 20);
    QSeries same = evaluate_polynomial(std::vector<long>{0, 1}, t);
    CHECK_FALSE(first_mismatch(t, same).has_value());
    QSeries sq = t.pow(2);
    CHECK_FALSE(first_mismatch(sq, t * t).has_value());
    CHECK_FALSE(first_mismatch(sq / t, t).has_value());
    CHECK_FALSE(first_mismatch(t.pow(-1) * t, QSeries::constant(1)).has_value());
    CHECK_THROWS_AS(QSeries::constant(0).inverse(), MathError);
}

TEST_CASE("generalized eta functions") {
    QSeries e = gen_eta_series(5, 0, 1, 4);
    CHECK(e.leading_exponent() == frac(1, 12));
    CHECK(e.coefficient(frac(1, 12)) == CycloElem(5, 1) - CycloElem::zeta(5, 1));
    CHECK_THROWS_AS(gen_eta_series(6, 0, 0, 4), MathError);
    CHECK_THROWS_AS(gen_eta_series(6, 6, 12, 4), MathError);
}

TEST_CASE("translation identities") {
    const long K = 15;
    for (int N = 2; N <= 12; ++N)
        for (long g = 0; g < N; ++g)
            for (long h = 0; h < N; ++h) {
                if (g == 0 && h == 0) continue;
                CAPTURE(N);
                CAPTURE(g);
                CAPTURE(h);
                QSeries base = gen_eta_series(N, g, h, K);
                CHECK_FALSE(first_mismatch(gen_eta_series(N, g, h + N, K), base).has_value());
                QSeries shifted = base * (-CycloElem::zeta(N, -h));
                CHECK_FALSE(first_mismatch(gen_eta_series(N, g + N, h, K), shifted).has_value());
            }
}

TEST_CASE("hauptmodul expansions") {
    // t(2) = eta^24 / (64 eta(2 tau)^24) = q^(-1) / 64 * prod (1 - q^n)^24 (1 - q^(2n))^(-24)
    const long K = 30;
    QSeries t2 = hauptmodul_series("t2", K);
    CHECK(t2.leading_exponent() == -1);
    auto ref = mul(eta_product(1, 24, K), eta_product(2, -24, K));
    for (long k = 0; k < K; ++k) CHECK(rat(t2.coefficient(k - 1)) == Rational(ref[k]) / 64);
    CHECK(rat(t2.coefficient(0)) == frac(-24, 64));

    QSeries t5 = hauptmodul_series("t5", 10);
    CycloElem lead = t5.coefficient(*t5.leading_exponent());
    CHECK(lead.norm() * lead.norm() == 1); // a unit of Z[zeta_5]

    CHECK(hauptmodul_series("a4", 20).is_zero());
    CHECK_THROWS_AS(hauptmodul_series("t11", 10), MathError);
    CHECK_THROWS_AS(hauptmodul_series("u5", 10), MathError);
    CHECK_THROWS_AS(hauptmodul_series("s6/4", 10), MathError);
}

TEST_CASE("named identities at full precision") {
    for (const char* id : {"tu2", "f5", "f8"}) {
        IdentityResult r = verify_identity(id, 200);
        CAPTURE(id);
        CHECK(r.error == "");
        CHECK(r.pass);
        CHECK(r.precision >= 200);
    }
}

TEST_CASE("identity catalogue") {
    auto names = identity_names();
    CHECK(names.size() == 56);
    auto results = verify_identities(names, 40, 2);
    for (const auto& r : results) {
        CAPTURE(r.id);
        CHECK(r.pass);
    }
    CHECK_THROWS_WITH_AS(verify_identity("f11", 20), doctest::Contains("UnsupportedCombination"), MathError);
}
