#include "ecpair/families.hpp"

#include "ecpair/errors.hpp"
#include "ecpair/poly.hpp"
#include "ecpair/torsion.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace ecp {

namespace {

using Poly = std::vector<long>;
const Poly T = {0, 1};            // t
const Poly ONE_MINUS = {1, -1};   // 1 - t
const Poly ONE_PLUS = {1, 1};     // 1 + t
const Poly CYCLO6 = {1, -1, 1};   // 1 - t + t^2
const Poly SUM_SQ = {1, 0, 1};    // 1 + t^2
const Poly GOLDEN = {1, 1, -1};   // 1 + t - t^2
const Poly ONE_3PLUS = {1, 3};    // 1 + 3u
const Poly ONE_3MINUS = {1, -3};  // 1 - 3u
const Poly SILVER_P = {1, 2, -1}; // 1 + 2u - u^2
const Poly SILVER_M = {1, -2, -1};// 1 - 2u - u^2

Rational eval_poly(const Poly& p, const Rational& t) {
    Rational acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

RatFunc rf(Rational c, std::vector<std::pair<Poly, long>> f) { return RatFunc{std::move(c), std::move(f)}; }

const RatFunc& lookup(const std::map<int, RatFunc>& table, int N, const char* what) {
    auto it = table.find(N);
    if (it == table.end()) fail("DomainError", std::string("no ") + what + " table for N = " + std::to_string(N));
    return it->second;
}

} // namespace

Rational RatFunc::eval(const Rational& t) const {
    Rational out = constant;
    if (out == 0) return out;
    for (const auto& [p, e] : factors) {
        Rational v = eval_poly(p, t);
        if (v == 0) {
            if (e < 0) fail("DegenerateParameter", "pole at t = " + to_string(t));
            return 0;
        }
        out *= rpow(v, e);
    }
    return out;
}

FactoredRational RatFunc::eval_factored(const Rational& t) const {
    if (constant == 0) fail("DomainError", "zero function");
    FactoredRational out = FactoredRational::from_rational(constant);
    for (const auto& [p, e] : factors) {
        Rational v = eval_poly(p, t);
        if (v == 0) fail(e < 0 ? "DegenerateParameter" : "DomainError", "factor vanishes at t = " + to_string(t));
        out *= FactoredRational::from_rational(v).pow(e);
    }
    return out;
}

const std::vector<int>& cyclic_orders() {
    static const std::vector<int> v = {4, 5, 6, 7, 8, 9, 10, 12};
    return v;
}

const std::vector<int>& bicyclic_orders() {
    static const std::vector<int> v = {4, 6, 8};
    return v;
}

const RatFunc& f_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(1, {{T, 1}})},
        {5, rf(1, {{T, 1}})},
        {6, rf(1, {{T, 1}, {ONE_MINUS, 2}})},
        {7, rf(1, {{T, 1}, {ONE_MINUS, 4}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 2}, {ONE_PLUS, 4}})},
        {9, rf(1, {{T, 1}, {ONE_MINUS, 4}, {CYCLO6, 3}})},
        {10, rf(1, {{T, 1}, {ONE_MINUS, 2}, {ONE_PLUS, 8}, {GOLDEN, 5}})},
        {12, rf(1, {{T, 1}, {ONE_MINUS, 2}, {CYCLO6, 3}, {SUM_SQ, 4}, {ONE_PLUS, 6}})},
    };
    return lookup(table, N, "f_N");
}

const RatFunc& modular_f_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(1, {{T, 1}})},
        {5, rf(1, {{T, 1}})},
        {6, rf(1, {{T, 1}, {ONE_MINUS, 2}})},
        {7, rf(1, {{T, 1}, {ONE_MINUS, 4}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 2}, {ONE_PLUS, -4}})},
        {9, rf(1, {{T, 1}, {ONE_MINUS, 4}, {CYCLO6, 3}})},
        {10, rf(1, {{T, 1}, {ONE_MINUS, 2}, {ONE_PLUS, -2}, {GOLDEN, -5}})},
        {12, rf(1, {{T, 1}, {ONE_MINUS, 2}, {CYCLO6, 3}, {SUM_SQ, 4}, {ONE_PLUS, -6}})},
    };
    return lookup(table, N, "modular f");
}

const RatFunc& g_table(int N, int nu) {
    static const std::map<int, RatFunc> g1 = {
        {4, rf(4, {{T, 1}, {ONE_PLUS, 2}})},
        {6, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_3PLUS, 3}, {ONE_PLUS, 4}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_PLUS, 1}, {SUM_SQ, 2}, {SILVER_P, 4}})},
    };
    static const std::map<int, RatFunc> g2 = {
        {4, rf(1, {{ONE_MINUS, 1}, {ONE_PLUS, 1}})},
        {6, rf(1, {{ONE_MINUS, 1}, {ONE_PLUS, 1}, {ONE_3MINUS, 1}, {ONE_3PLUS, 1}})},
        {8, rf(1, {{SILVER_M, 1}, {SILVER_P, 1}})},
    };
    static const std::map<int, RatFunc> g3 = {
        {4, rf(1, {{ONE_PLUS, 1}})},
        {6, rf(1, {{ONE_MINUS, 1}, {ONE_3PLUS, 1}})},
        {8, rf(1, {{ONE_MINUS, 1}, {ONE_PLUS, 1}, {SUM_SQ, 1}, {SILVER_P, 1}})},
    };
    switch (nu) {
    case 1: return lookup(g1, N, "g^(1)");
    case 2: return lookup(g2, N, "g^(2)");
    case 3: return lookup(g3, N, "g^(3)");
    default: fail("DomainError", "g index must be 1, 2 or 3");
    }
}

const RatFunc& tate_a_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(0, {})},
        {5, rf(1, {{T, 1}})},
        {6, rf(1, {{T, 1}})},
        {7, rf(1, {{T, 1}, {ONE_MINUS, 1}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_PLUS, -1}})},
        {9, rf(1, {{T, 1}, {ONE_MINUS, 2}})},
        {10, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_PLUS, -1}, {GOLDEN, -1}})},
        {12, rf(1, {{T, 1}, {ONE_MINUS, 1}, {CYCLO6, 1}, {ONE_PLUS, -1}})},
    };
    return lookup(table, N, "a(t)");
}

const RatFunc& tate_b_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(1, {{T, 1}})},
        {5, rf(1, {{T, 1}})},
        {6, rf(1, {{T, 1}, {ONE_MINUS, 1}})},
        {7, rf(1, {{T, 1}, {ONE_MINUS, 2}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_PLUS, -2}})},
        {9, rf(1, {{T, 1}, {ONE_MINUS, 2}, {CYCLO6, 1}})},
        {10, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_PLUS, -1}, {GOLDEN, -2}})},
        {12, rf(1, {{T, 1}, {ONE_MINUS, 1}, {CYCLO6, 1}, {SUM_SQ, 1}, {ONE_PLUS, -2}})},
    };
    return lookup(table, N, "b(t)");
}

const RatFunc& bicyclic_a_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(0, {})},
        {6, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_3PLUS, -1}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 1}, {SUM_SQ, 1}, {ONE_PLUS, -1}, {SILVER_P, -1}})},
    };
    return lookup(table, N, "a(u)");
}

const RatFunc& bicyclic_b_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(Rational(1, 4), {{T, 1}, {ONE_PLUS, -2}})},
        {6, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_PLUS, 2}, {ONE_3PLUS, -2}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 1}, {SUM_SQ, 1}, {SILVER_P, -2}})},
    };
    return lookup(table, N, "b(u)");
}

const RatFunc& bicyclic_qx_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(Rational(-1, 4), {{ONE_PLUS, -1}})},
        {6, rf(Rational(-1, 4), {{ONE_MINUS, 1}, {ONE_PLUS, 2}, {ONE_3PLUS, -1}})},
        {8, rf(Rational(-1, 4), {{ONE_MINUS, 1}, {ONE_PLUS, 1}, {SUM_SQ, 1}, {SILVER_P, -1}})},
    };
    return lookup(table, N, "x(Q')");
}

const RatFunc& bicyclic_qy_table(int N) {
    static const std::map<int, RatFunc> table = {
        {4, rf(Rational(1, 8), {{ONE_PLUS, -2}})},
        {6, rf(Rational(1, 8), {{ONE_MINUS, 2}, {ONE_PLUS, 3}, {ONE_3PLUS, -2}})},
        {8, rf(Rational(1, 8), {{ONE_MINUS, 2}, {ONE_PLUS, 1}, {SUM_SQ, 2}, {SILVER_P, -2}})},
    };
    return lookup(table, N, "y(Q')");
}

const RatFunc& t_of_u_table(int N) {
    static const std::map<int, RatFunc> table = {
        {2, rf(4, {{T, 1}, {ONE_MINUS, -2}})},
        {4, rf(Rational(1, 4), {{T, 1}, {ONE_PLUS, -2}})},
        {6, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_3PLUS, -1}})},
        {8, rf(1, {{T, 1}, {ONE_MINUS, 1}, {ONE_PLUS, -1}})},
    };
    return lookup(table, N, "t(u)");
}

std::vector<Rational> excluded_parameters(Form form, int N) {
    std::vector<long> raw;
    std::vector<Rational> out;
    switch (form) {
    case Form::TateCyclic: {
        static const std::map<int, std::vector<Rational>> ex = {
            {4, {0, Rational(1, 16)}}, {5, {0}},     {6, {0, 1, Rational(1, 9)}}, {7, {0, 1}},
            {8, {-1, 0, 1}},           {9, {0, 1}},  {10, {-1, 0, 1}},            {12, {-1, 0, 1}},
        };
        auto it = ex.find(N);
        if (it == ex.end()) fail("DomainError", "no cyclic family of order " + std::to_string(N));
        return it->second;
    }
    case Form::TateBicyclic: {
        static const std::map<int, std::vector<Rational>> ex = {
            {4, {-1, 0, 1}},
            {6, {-1, Rational(-1, 3), 0, Rational(1, 3), 1}},
            {8, {-1, 0, 1}},
        };
        auto it = ex.find(N);
        if (it == ex.end()) fail("DomainError", "no bicyclic family of order " + std::to_string(N));
        return it->second;
    }
    case Form::Order2:
    case Form::Order3: return {-1, 0};
    case Form::Bicyclic2: return {0, 1};
    case Form::Order2Minus1:
    case Form::Order3Minus1: return {};
    }
    return out;
}

bool is_degenerate(const FamilyId& id) {
    switch (id.form) {
    case Form::Order2:
    case Form::Order2Minus1:
    case Form::Order3Minus1:
    case Form::Bicyclic2:
        if (id.a == 0) return true;
        break;
    default: break;
    }
    if (id.form == Form::Order2Minus1 || id.form == Form::Order3Minus1) return false;
    auto ex = excluded_parameters(id.form, id.N);
    return std::find(ex.begin(), ex.end(), id.param) != ex.end();
}

FamilyCurve build_curve(const FamilyId& id) {
    if (is_degenerate(id)) fail("DegenerateParameter", id.str() + " lies on the degenerate locus");
    const Rational& t = id.param;
    const Rational& a = id.a;
    Point P = Point::affine(0, 0);
    auto tate = [&](const Rational& A, const Rational& B) { return Curve(1 + A, B, B, 0, 0); };
    try {
        switch (id.form) {
        case Form::TateCyclic:
            return {tate(tate_a_table(id.N).eval(t), tate_b_table(id.N).eval(t)), P, std::nullopt};
        case Form::TateBicyclic: {
            Curve E = tate(bicyclic_a_table(id.N).eval(t), bicyclic_b_table(id.N).eval(t));
            Point Q = Point::affine(bicyclic_qx_table(id.N).eval(t), bicyclic_qy_table(id.N).eval(t));
            return {E, P, Q};
        }
        case Form::Order2:
            return {Curve(0, a, 0, a * a * t / (4 * (t + 1)), 0), P, std::nullopt};
        case Form::Order2Minus1:
            return {Curve(0, 0, 0, a, 0), P, std::nullopt};
        case Form::Order3:
            return {Curve(1, 0, t / (27 * (t + 1)), 0, 0), P, std::nullopt};
        case Form::Order3Minus1:
            return {Curve(0, 0, a, 0, 0), P, std::nullopt};
        case Form::Bicyclic2:
            return {Curve(0, -a * (1 + t), 0, a * a * t, 0), P, Point::affine(a, 0)};
        }
    } catch (const MathError& e) {
        if (e.kind() == "SingularCurve") fail("DegenerateParameter", id.str() + ": " + e.detail());
        throw;
    }
    fail("DomainError", "unknown family form");
}

Prediction predicted_pairings(const FamilyId& id) {
    Prediction out;
    const Rational& t = id.param;
    const QmodZ half(1, 2), third(1, 3);
    switch (id.form) {
    case Form::TateCyclic:
        out.PP = -tensor_of(f_table(id.N).eval_factored(t), QmodZ(1, id.N));
        break;
    case Form::TateBicyclic:
        out.PP = -tensor_of(g_table(id.N, 1).eval_factored(t), QmodZ(1, id.N));
        out.QQ = tensor_of(g_table(id.N, 2).eval_factored(t), half);
        out.PQ = tensor_of(g_table(id.N, 3).eval_factored(t), half);
        break;
    case Form::Order2: out.PP = tensor_of(t * (1 + t), half); break;
    case Form::Order2Minus1: out.PP = tensor_of(id.a, half); break;
    case Form::Order3: out.PP = -tensor_of(t * (1 + t) * (1 + t), third); break;
    case Form::Order3Minus1: out.PP = -tensor_of(id.a, third); break;
    case Form::Bicyclic2:
        out.PP = tensor_of(t, half);
        out.QQ = tensor_of(1 - t, half);
        out.PQ = tensor_of(id.a, half);
        break;
    }
    return out;
}

Rational family_j(const FamilyId& id) {
    if (is_degenerate(id)) fail("DegenerateParameter", id.str() + " lies on the degenerate locus");
    const Rational& t = id.param;
    auto tate_j = [](const Rational& a, const Rational& b) -> Rational {
        Rational c4 = a * a * a * a + 4 * a * a * a + 8 * a * a * b + 6 * a * a - 8 * a * b + 4 * a + 16 * b * b - 16 * b + 1;
        Rational d = -b * b * b * (a * a * a * a + 3 * a * a * a + 8 * a * a * b + 3 * a * a - 20 * a * b + a + 16 * b * b - b);
        return c4 * c4 * c4 / d;
    };
    switch (id.form) {
    case Form::TateCyclic: return tate_j(tate_a_table(id.N).eval(t), tate_b_table(id.N).eval(t));
    case Form::TateBicyclic: return tate_j(bicyclic_a_table(id.N).eval(t), bicyclic_b_table(id.N).eval(t));
    case Form::Order2: return 64 * rpow(t + 4, 3) / (t * t);
    case Form::Order2Minus1: return 1728;
    case Form::Order3: return 27 * (t + 1) * rpow(t + 9, 3) / rpow(t, 3);
    case Form::Order3Minus1: return 0;
    case Form::Bicyclic2: return 256 * rpow(1 - t + t * t, 3) / (t * t * (1 - t) * (1 - t));
    }
    fail("DomainError", "unknown family form");
}

Rational recognize_parameter(const Curve& E, const Point& P) {
    long N = E.order(P);
    if (N == 0) fail("NonTorsion", P.str() + " has no finite order <= 12");
    if (N < 4 || N == 11) fail("OrderTooSmall", "no Tate normal family for order " + std::to_string(N));
    TateNormalForm nf = tate_normal_form(E, P);
    const Rational& a = nf.a;
    const Rational& b = nf.b;
    switch (N) {
    case 4:
    case 5: return b;
    case 6:
    case 7: return 1 - b / a;
    case 8: return a / b - 1;
    case 9: return (a - a * a - b) / (a - b);
    case 10: return (a - a * a - b) / (a * a);
    case 12: return -(a * a * a - a * b + b * b) / ((a - b) * (a - b));
    default: fail("DomainError", "unsupported order " + std::to_string(N));
    }
}

Rational recognize_bicyclic_parameter(const Curve& E, const Point& P, const Point& Q) {
    long N = E.order(P);
    if (N != 4 && N != 6 && N != 8) fail("DomainError", "bicyclic families need order 4, 6 or 8");
    if (E.order(Q) != 2) fail("DomainError", "Q must have order 2");
    Rational t = recognize_parameter(E, P);
    // Quadratic in u from the t-u relation.
    Rational A, B, C;
    if (N == 4) { A = 4 * t; B = 8 * t - 1; C = 4 * t; }
    else if (N == 6) { A = 1; B = 3 * t - 1; C = t; }
    else { A = 1; B = t - 1; C = t; }
    Rational disc = B * B - 4 * A * C;
    if (!is_rational_square(disc)) fail("DomainError", "no rational u over t = " + to_string(t));
    Rational s = rational_sqrt(disc);
    TateNormalForm nf = tate_normal_form(E, P);
    Point Qn = nf.transform.forward(Q);
    for (const Rational& u : std::vector<Rational>{(-B - s) / (2 * A), (-B + s) / (2 * A)}) {
        FamilyId id{Form::TateBicyclic, static_cast<int>(N), u, 0};
        if (is_degenerate(id)) continue;
        Point Qp = Point::affine(bicyclic_qx_table(static_cast<int>(N)).eval(u),
                                 bicyclic_qy_table(static_cast<int>(N)).eval(u));
        if (Qp == Qn) return u;
    }
    fail("DomainError", "Q is not the marked 2-torsion point of a bicyclic family");
}

FamilyId FamilyId::parse(const std::string& text) {
    static const std::regex cyc(R"(E(\d+)@t=([^,]+))");
    static const std::regex bic(R"(E(\d+)x2@u=([^,]+))");
    static const std::regex two(R"(E2@t=([^,]+),a=([^,]+))");
    static const std::regex three_a(R"(E3@a=([^,]+))");
    static const std::regex two_two(R"(E2x2@u=([^,]+),a=([^,]+))");
    std::smatch m;
    FamilyId id;
    if (std::regex_match(text, m, two_two)) {
        id.form = Form::Bicyclic2;
        id.N = 2;
        id.param = parse_rational(m[1].str());
        id.a = parse_rational(m[2].str());
    } else if (std::regex_match(text, m, two)) {
        id.N = 2;
        id.param = parse_rational(m[1].str());
        id.a = parse_rational(m[2].str());
        id.form = id.param == -1 ? Form::Order2Minus1 : Form::Order2;
    } else if (std::regex_match(text, m, three_a)) {
        id.form = Form::Order3Minus1;
        id.N = 3;
        id.param = -1;
        id.a = parse_rational(m[1].str());
    } else if (std::regex_match(text, m, bic)) {
        id.form = Form::TateBicyclic;
        id.N = std::stoi(m[1].str());
        id.param = parse_rational(m[2].str());
        if (id.N != 4 && id.N != 6 && id.N != 8) fail("ParseError", "bicyclic order must be 4, 6 or 8: " + text);
    } else if (std::regex_match(text, m, cyc)) {
        id.N = std::stoi(m[1].str());
        id.param = parse_rational(m[2].str());
        if (id.N == 3) {
            id.form = Form::Order3;
            if (id.param == -1) fail("ParseError", "use E3@a=<r> for t = -1");
        } else {
            id.form = Form::TateCyclic;
            const auto& orders = cyclic_orders();
            if (std::find(orders.begin(), orders.end(), id.N) == orders.end())
                fail("ParseError", "no cyclic family of order " + std::to_string(id.N));
        }
    } else {
        fail("ParseError", "unrecognised family id: " + text);
    }
    return id;
}

std::string FamilyId::str() const {
    auto r = [](const Rational& x) {
        return x.get_den() == 1 ? x.get_num().get_str() : to_string(x);
    };
    switch (form) {
    case Form::TateCyclic: return "E" + std::to_string(N) + "@t=" + r(param);
    case Form::TateBicyclic: return "E" + std::to_string(N) + "x2@u=" + r(param);
    case Form::Order2: return "E2@t=" + r(param) + ",a=" + r(a);
    case Form::Order2Minus1: return "E2@t=-1,a=" + r(a);
    case Form::Order3: return "E3@t=" + r(param);
    case Form::Order3Minus1: return "E3@a=" + r(a);
    case Form::Bicyclic2: return "E2x2@u=" + r(param) + ",a=" + r(a);
    }
    return "?";
}

} // namespace ecp
