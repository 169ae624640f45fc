#pragma once

#include "ecpair/curve.hpp"
#include "ecpair/local.hpp"
#include "ecpair/tensor.hpp"
#include "ecpair/torsion.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace ecp {

// alpha + beta x + gamma y. Lines are stored with gamma = 1, verticals with
// (gamma, beta) = (0, 1), constants with beta = gamma = 0.
struct LineFactor {
    Rational alpha, beta, gamma;

    static LineFactor vertical(const Rational& x0);
    static LineFactor line(const Rational& slope, const Rational& intercept); // y - slope x - intercept
    static LineFactor constant(const Rational& c);
    Rational at(const Point& P) const; // affine P only
    std::array<Rational, 3> key() const { return {alpha, beta, gamma}; }
};

// Product of line factors with integer exponents.
class FactoredFunction {
public:
    void multiply(const LineFactor& g, long e);
    FactoredFunction pow(long k) const;
    FactoredFunction& operator*=(const FactoredFunction& o);
    const std::map<std::array<Rational, 3>, long>& factors() const { return factors_; }
    size_t size() const { return factors_.size(); }

private:
    std::map<std::array<Rational, 3>, long> factors_;
};

LineFactor factor_of(const std::array<Rational, 3>& key);

// Order and leading coefficient at Q with respect to a uniformizer.
struct LocalValue {
    long ord = 0;
    Rational lc;
};
LocalValue local_value(const Curve& E, const LineFactor& g, const Point& Q, Uniformizer u = Uniformizer::Canonical);

// Miller function with divisor n(P) - n(O). Throws NotAnnihilated if nP != O.
FactoredFunction miller_function(const Curve& E, const Point& P, long n);

long ord_at(const Curve& E, const FactoredFunction& f, const Point& Q);
// Full leading coefficient as a rational (may be large).
Rational lc_at(const Curve& E, const FactoredFunction& f, const Point& Q, Uniformizer u = Uniformizer::Canonical);
// lc_Q(f) (x) r, accumulated factor by factor.
TensorClass lc_tensor(const Curve& E, const FactoredFunction& f, const Point& Q, const QmodZ& r,
                      Uniformizer u = Uniformizer::Canonical);

// <P, Q> in Q^x (x) Q/Z. n = 0 uses the order of P.
TensorClass pairing_points(const Curve& E, const Point& P, const Point& Q, Uniformizer u = Uniformizer::Canonical,
                           long n = 0);

using Divisor = std::vector<std::pair<Point, long>>;

// D = (S) - (O) + div(h) for a degree-zero D; h returned as line factors.
struct DivisorReduction {
    Point S;
    FactoredFunction h;
};
DivisorReduction reduce_divisor(const Curve& E, const Divisor& D);

// <[D], [E]>; D must have torsion class (NonTorsionClass otherwise) and E
// degree zero (NonZeroDegree otherwise).
TensorClass pairing_divisors(const Curve& E, const Divisor& D, const Divisor& F);

// <[(P+R) - (R)], [F]> computed from the translate f_P(X - R) of the Miller
// function of P, expanded at each point of F.
TensorClass pairing_translated(const Curve& E, const Point& P, const Point& R, const Divisor& F);

enum class WeilRoute { Auto, Translate, LeadingCoefficients };

// Weil pairing of n-torsion points, an element of {+1, -1} over Q.
// Translate: supports separated by a rational torsion translate T, throws
// NoAuxiliaryPoint if none exists. LeadingCoefficients: normalized local
// symbols at the shared support. Auto: Translate, else LeadingCoefficients.
Rational weil_pairing(const Curve& E, const Point& P, const Point& Q, long n, WeilRoute route = WeilRoute::Auto,
                      const TorsionGroup* group = nullptr);

// Frey-Rueck pairing <P, Q>_n in Q^x / (Q^x)^n.
FactoredRational frey_ruck(const Curve& E, const Point& P, const Point& Q, long n);

struct Gram {
    std::vector<std::vector<TensorClass>> entries; // rank x rank, on gen1, gen2
};
Gram gram_matrix(const Curve& E, const TorsionGroup& G);

// <(i1,j1), (i2,j2)> from the Gram matrix by bilinearity.
TensorClass gram_pairing(const Gram& gram, const TorsionGroup& G, std::pair<long, long> a, std::pair<long, long> b);

// Elements orthogonal to the whole group, as coordinates (i, j).
std::vector<std::pair<long, long>> intrinsic_subgroup(const Gram& gram, const TorsionGroup& G);

// Primes dividing the discriminant of an integral model.
std::vector<Integer> bad_prime_superset(const Curve& E);
bool divides_integral_discriminant(const Curve& E, const Integer& p);

} // namespace ecp
