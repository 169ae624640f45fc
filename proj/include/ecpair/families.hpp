#pragma once

#include "ecpair/curve.hpp"
#include "ecpair/tensor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecp {

// constant * prod poly_i(t)^e_i with small integer polynomial factors
// (coefficients ascending). Exponents may be negative.
struct RatFunc {
    Rational constant = 1;
    std::vector<std::pair<std::vector<long>, long>> factors;

    // Throws DegenerateParameter when a factor with negative exponent vanishes.
    Rational eval(const Rational& t) const;
    // Factor-by-factor factorization; z must be nonzero.
    FactoredRational eval_factored(const Rational& t) const;
    bool is_zero() const { return constant == 0; }
};

enum class Form {
    TateCyclic,   // E_{N,t}, N in {4..10, 12}
    TateBicyclic, // E'_{N,u}, N in {4, 6, 8}
    Order2,       // E_{2,t,a}, t != -1
    Order2Minus1, // E_{2,-1,a}
    Order3,       // E_{3,t}, t != -1
    Order3Minus1, // E_{3,-1,a}
    Bicyclic2,    // E'_{2,u,a}
};

struct FamilyId {
    Form form = Form::TateCyclic;
    int N = 4;
    Rational param; // t or u; unused for the -1 forms
    Rational a;     // scale parameter for the order 2/3 forms

    // "E<N>@t=<r>", "E<N>x2@u=<r>", "E2@t=<r>,a=<r>", "E3@t=<r>", "E3@a=<r>",
    // "E2x2@u=<r>,a=<r>". Throws ParseError.
    static FamilyId parse(const std::string& text);
    std::string str() const;
    bool has_Q() const { return form == Form::TateBicyclic || form == Form::Bicyclic2; }
};

struct FamilyCurve {
    Curve curve;
    Point P;
    std::optional<Point> Q;
};

// Rational parameter values excluded for the form (denominators or
// discriminant vanish).
std::vector<Rational> excluded_parameters(Form form, int N);
bool is_degenerate(const FamilyId& id);
// Throws DegenerateParameter for excluded parameters.
FamilyCurve build_curve(const FamilyId& id);

struct Prediction {
    TensorClass PP;
    std::optional<TensorClass> QQ, PQ;
};
Prediction predicted_pairings(const FamilyId& id);

// j-invariant from closed forms in the family parameters.
Rational family_j(const FamilyId& id);

// Polynomial tables.
const RatFunc& f_table(int N);                // f_N(t), -<P,P> = f_N (x) 1/N
const RatFunc& g_table(int N, int nu);        // g_N^(nu)(u), nu in {1,2,3}
const RatFunc& tate_a_table(int N);           // a(t)
const RatFunc& tate_b_table(int N);           // b(t)
const RatFunc& bicyclic_a_table(int N);       // a(u)
const RatFunc& bicyclic_b_table(int N);       // b(u)
const RatFunc& bicyclic_qx_table(int N);      // x(Q')(u)
const RatFunc& bicyclic_qy_table(int N);      // y(Q')(u)
const RatFunc& t_of_u_table(int N);           // N in {2, 4, 6, 8}
const RatFunc& modular_f_table(int N);        // (E01 E03 / E02^2)^N as a function of t

// t with (E, P) isomorphic to (E_{N,t}, (0,0)); N is the order of P.
Rational recognize_parameter(const Curve& E, const Point& P);
// u with (E, P, Q) isomorphic to (E'_{N,u}, (0,0), Q'); throws DomainError
// when Q is not the marked 2-torsion point for either root of the t-u relation.
Rational recognize_bicyclic_parameter(const Curve& E, const Point& P, const Point& Q);

// Cyclic orders with a Tate normal family.
const std::vector<int>& cyclic_orders();
const std::vector<int>& bicyclic_orders();

} // namespace ecp
