#include "ecpair/errors.hpp"
#include "ecpair/poly.hpp"
#include "ecpair/torsion.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace ecp;

namespace {

std::string shape(const TorsionGroup& G) { return std::to_string(G.d1) + "x" + std::to_string(G.d2); }

// Every element has finite order dividing the exponent, the table is closed
// under addition and all elements are distinct.
void check_group(const Curve& E, const TorsionGroup& G) {
    std::set<Point> seen(G.elements.begin(), G.elements.end());
    CHECK(static_cast<long>(seen.size()) == G.size());
    for (const auto& P : G.elements) {
        CHECK(E.contains(P));
        long o = oracle::order(E, P);
        CHECK(o > 0);
        CHECK(G.d1 % o == 0);
        CHECK(seen.count(E.add(P, G.gen1)) == 1);
    }
}

} // namespace

TEST_CASE("rational roots") {
    // (2x - 3)(x + 5)(x^2 + 1)
    ZPoly f = ZPoly{-3, 2} * ZPoly{5, 1} * ZPoly{1, 0, 1};
    auto r = rational_roots(f);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == -5);
    CHECK(r[1] == frac(3, 2));
    auto sq = rational_roots(ZPoly{-3, 2} * ZPoly{-3, 2} * ZPoly{0, 1});
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == 0);
    CHECK(rational_roots(ZPoly{2, 0, 1}).empty());
}

TEST_CASE("division polynomials") {
    Curve E(0, 0, 0, 0, 1);
    // 3x^4 + 12x = 3x(x^3 + 4), up to a unit
    CHECK(division_polynomial(E, 3) == ZPoly{0, 4, 0, 0, 1});
    Curve F(0, 0, 0, 1, 1);
    CHECK(degree(division_polynomial(F, 5)) == 12);
    CHECK(degree(division_polynomial(F, 7)) == 24);
    // 2-torsion: 4x^3 + 4x + 4 up to a unit, times the odd part
    CHECK(degree(division_polynomial(F, 2)) == 3);
}

TEST_CASE("known torsion structures") {
    auto t1 = torsion_subgroup(Curve(0, 0, 1, 0, 0));
    CHECK(shape(t1) == "3x1");
    std::set<Point> els(t1.elements.begin(), t1.elements.end());
    CHECK(els == std::set<Point>{Point::origin(), Point::affine(0, 0), Point::affine(0, -1)});

    CHECK(shape(torsion_subgroup(Curve(0, -3, 0, 2, 0))) == "2x2");
    CHECK(shape(torsion_subgroup(Curve(2, 1, 1, 0, 0))) == "5x1");
    CHECK(shape(torsion_subgroup(Curve(0, 0, 0, 0, 1))) == "6x1");
    CHECK(shape(torsion_subgroup(Curve(0, 0, 0, 0, 4))) == "3x1");
    CHECK(shape(torsion_subgroup(Curve(0, 0, 0, 0, -2))) == "1x1");
    CHECK(shape(torsion_subgroup(Curve(0, 0, 1, -1, 0))) == "1x1");
    CHECK(shape(torsion_subgroup(Curve(1, 1, 1, -10, -10))) == "4x2"); // 15a1
    CHECK(shape(torsion_subgroup(Curve(0, -1, 1, 0, 0))) == "5x1");    // 11a3
}

TEST_CASE("torsion of Tate normal forms contains the marked point") {
    // y^2 + (1 - c) xy - b y = x^3 - b x^2 in Kubert's parametrization
    struct Case { Rational b, c; long N; };
    std::vector<Case> cases;
    for (long t = 2; t <= 6; ++t) {
        Rational T = t;
        cases.push_back({T * T * (T - 1), T * (T - 1), 8});      // order 8
        cases.push_back({T * T * T - T * T, T * T - T, 8});
        cases.push_back({T, T, 5});                               // order 5
        cases.push_back({T + T * T, T, 6});                       // order 6
        cases.push_back({T * T * T - T * T, T * T - T, 7});       // order 7
    }
    for (const auto& c : cases) {
        Curve E(1 - c.c, -c.b, -c.b, 0, 0);
        Point P = Point::affine(0, 0);
        long o = oracle::order(E, P);
        REQUIRE(o > 0);
        auto G = torsion_subgroup(E);
        CHECK(G.coordinates(P).has_value());
        CHECK(G.size() % o == 0);
        check_group(E, G);
    }
}

TEST_CASE("group from generators and coordinates") {
    Curve E(0, -3, 0, 2, 0);
    auto G = group_from_generators(E, Point::affine(0, 0), Point::affine(1, 0));
    CHECK(G.size() == 4);
    check_group(E, G);
    auto c = G.coordinates(Point::affine(2, 0));
    REQUIRE(c);
    CHECK(G.element(c->first, c->second) == Point::affine(2, 0));
    CHECK_FALSE(G.coordinates(Point::affine(5, 1)).has_value());
    CHECK_THROWS_AS(group_from_generators(Curve(0, 0, 1, -1, 0), Point::affine(0, 0), Point::origin()), MathError);
}

TEST_CASE("points killed by n") {
    Curve E(0, 0, 0, 0, 1);
    auto pts = points_killed_by(E, 3);
    for (const auto& P : pts) CHECK(E.mul(P, 3).is_origin());
    CHECK(pts.size() == 2); // (0, +-1); O is not listed
}

TEST_CASE("Tate normal form") {
    Curve E(1, 3, 3, 0, 0); // E_{4,3}: y^2 + xy + 3y = x^3 + 3x^2
    auto nf = tate_normal_form(E, Point::affine(0, 0));
    CHECK(nf.a == 0);
    CHECK(nf.b == 3);
    // E_{8,2} written in Tate form is recovered unchanged
    Curve E8(frac(1, 3), frac(-2, 9), frac(-2, 9), 0, 0);
    auto n8 = tate_normal_form(E8, Point::affine(0, 0));
    CHECK(n8.a == frac(-2, 3));
    CHECK(n8.b == frac(-2, 9));
    CHECK(n8.transform.apply(E8) == E8);
    // from a shifted model the marked point still gives (a, b)
    Transform T;
    T.u = 2;
    T.r = 1;
    T.s = 3;
    T.t = -1;
    Curve S = T.apply(E8);
    auto back = tate_normal_form(S, T.forward(Point::affine(0, 0)));
    CHECK(back.a == frac(-2, 3));
    CHECK(back.b == frac(-2, 9));
    CHECK_THROWS_AS(tate_normal_form(Curve(0, -3, 0, 2, 0), Point::affine(0, 0)), MathError);
    CHECK_THROWS_AS(tate_normal_form(Curve(0, 0, 1, 0, 0), Point::affine(0, 0)), MathError);
}
