#include "ecpair/census.hpp"
#include "ecpair/classifier.hpp"
#include "ecpair/errors.hpp"
#include "ecpair/families.hpp"
#include "ecpair/pairing.hpp"

#include <doctest.h>

#include <set>

using namespace ecp;

namespace {

RowKey row(long d1, long d2, long b, std::string orbit = "") { return RowKey{d1, d2, b, std::move(orbit)}; }

std::set<std::string> row_names(const Census& c) {
    std::set<std::string> out;
    for (const auto& [k, r] : c.rows) out.insert(k.str());
    return out;
}

} // namespace

TEST_CASE("admissible rows") {
    CHECK(admissible_rows().size() == 26);
    CHECK(is_admissible(row(5, 1, 5)));
    CHECK(is_admissible(row(4, 2, 2, "2P")));
    CHECK(is_admissible(row(4, 2, 2, "Q")));
    CHECK_FALSE(is_admissible(row(7, 1, 7)));
    CHECK_FALSE(is_admissible(row(8, 2, 2)));
    CHECK(row(4, 2, 2, "2P").str() == "4x2|2|2P");
    CHECK(row(1, 1, 1).A_label() == "0");
}

TEST_CASE("classification examples") {
    auto c5 = classify(build_curve(FamilyId::parse("E5@t=32")).curve);
    CHECK(c5.row == row(5, 1, 5));
    CHECK(c5.intrinsic.size() == 5);

    auto c2 = classify(Curve(0, -3, 0, 2, 0));
    CHECK(c2.row == row(2, 2, 2));
    REQUIRE(c2.intrinsic.size() == 2);
    std::set<Point> B;
    for (auto [i, j] : c2.intrinsic) B.insert(c2.group.element(i, j));
    CHECK(B == std::set<Point>{Point::origin(), Point::affine(1, 0)});

    for (const char* t : {"2", "-3", "5/2", "-7/3"})
        CHECK(classify(build_curve(FamilyId::parse(std::string("E7@t=") + t)).curve).row == row(7, 1, 1));

    CHECK(classify(Curve(0, 0, 1, -1, 0)).row == row(1, 1, 1));
    // f_5(1) = 1 makes the whole group intrinsic; f_5(2) = 2 leaves it trivial
    CHECK(classify(build_curve(FamilyId::parse("E5@t=1")).curve).row == row(5, 1, 5));
    CHECK(classify(build_curve(FamilyId::parse("E5@t=2")).curve).row == row(5, 1, 1));
}

TEST_CASE("classification is always admissible and matches the Gram matrix") {
    for (const auto& fam : census_families())
        for (const auto& id : census_parameters(fam, 4)) {
            auto fc = build_curve(id);
            Classification c = classify(fc.curve, false);
            CAPTURE(id.str());
            CHECK(is_admissible(c.row));
            for (auto [i, j] : c.intrinsic)
                for (const auto& Q : c.group.elements)
                    CHECK(pairing_points(fc.curve, c.group.element(i, j), Q).is_zero());
        }
}

TEST_CASE("cyclic membership") {
    for (const char* s : {"E8@t=9", "E8@t=2", "E6@t=4", "E12@t=3", "E10@t=-1/4", "E9@t=8"}) {
        FamilyId id = FamilyId::parse(s);
        auto fc = build_curve(id);
        for (long M = 1; M <= id.N; ++M) {
            if (id.N % M) continue;
            bool oracle = pairing_points(fc.curve, fc.P, fc.curve.mul(fc.P, id.N / M)).is_zero();
            CAPTURE(s);
            CAPTURE(M);
            CHECK(membership_cyclic(fc.curve, fc.P, M) == oracle);
        }
    }
    auto e89 = build_curve(FamilyId::parse("E8@t=9"));
    CHECK(membership_cyclic(e89.curve, e89.P, 2));
    auto e52 = build_curve(FamilyId::parse("E5@t=2"));
    CHECK_FALSE(membership_cyclic(e52.curve, e52.P, 5));
    CHECK(membership_cyclic(e52.curve, e52.P, 1));
    CHECK_THROWS_AS(membership_cyclic(Curve(0, 0, 1, 0, 0), Point::affine(0, 0), 3), MathError);
}

TEST_CASE("bicyclic membership") {
    auto fc = build_curve(FamilyId::parse("E4x2@u=3"));
    CHECK(membership_bicyclic(fc.curve, fc.P, *fc.Q, {1, 1, 1}));
    CHECK_FALSE(membership_bicyclic(fc.curve, fc.P, *fc.Q, {1, 2, 2}));
    auto g = build_curve(FamilyId::parse("E4x2@u=3/5"));
    CHECK(membership_bicyclic(g.curve, g.P, *g.Q, {1, 2, 1}));
    for (const char* s : {"E4x2@u=3", "E4x2@u=3/5", "E6x2@u=2", "E8x2@u=5/3"}) {
        auto f = build_curve(FamilyId::parse(s));
        long N = f.curve.order(f.P);
        for (long M1 = 1; M1 <= N; ++M1) {
            if (N % M1) continue;
            for (long M2 : {1, 2})
                for (long M3 : {1, 2}) {
                    bool oracle = pairing_points(f.curve, f.P, f.curve.mul(f.P, N / M1)).is_zero() &&
                                  pairing_points(f.curve, *f.Q, f.curve.mul(*f.Q, 2 / M2)).is_zero() &&
                                  pairing_points(f.curve, f.P, f.curve.mul(*f.Q, 2 / M3)).is_zero();
                    CAPTURE(s);
                    CHECK(membership_bicyclic(f.curve, f.P, *f.Q, {M1, M2, M3}) == oracle);
                }
        }
    }
}

TEST_CASE("family censuses") {
    auto c5 = family_search("E5", 30);
    // specializations with torsion Z/10 also occur
    CHECK(row_names(c5).count("5|1"));
    CHECK(row_names(c5).count("5|5"));
    for (const auto& [k, r] : c5.rows) CHECK(r.count() > 0);
    CHECK(row_names(family_search("E7", 30)) == std::set<std::string>{"7|1"});
    CHECK(row_names(family_search("E8x2", 20)) == std::set<std::string>{"8x2|1"});
}

TEST_CASE("census is independent of the job count") {
    SweepOptions one, many;
    many.jobs = 3;
    auto a = family_search("E6", 12, one), b = family_search("E6", 12, many);
    REQUIRE(a.rows.size() == b.rows.size());
    for (const auto& [k, r] : a.rows) {
        CHECK(b.rows.at(k).js == r.js);
        CHECK(b.rows.at(k).witness_id == r.witness_id);
    }
}

TEST_CASE("table check failures") {
    TableReport empty = table_check({});
    CHECK(empty.missing.size() == 25);
    CHECK_THROWS_WITH_AS(enforce(empty), doctest::Contains("MissingRow"), MathError);

    Census bad;
    bad.family = "injected";
    CensusRow r;
    r.key = row(7, 1, 7);
    r.js.insert(0);
    r.witness_id = "injected";
    bad.rows[r.key] = r;
    TableReport rep = table_check({bad});
    REQUIRE(rep.inadmissible.size() == 1);
    CHECK(rep.inadmissible[0] == row(7, 1, 7));
    CHECK_THROWS_WITH_AS(enforce(rep), doctest::Contains("InadmissibleRow"), MathError);
}
