#pragma once

#include "ecpair/cyclotomic.hpp"
#include "ecpair/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ecp {

// scale * q^offset * sum_k body[k] q^(k/D), with body over Z[zeta_L] and
// scale in Q(zeta_L). Coefficients are known for exponents < until(); an
// empty until() means the series is exact (a polynomial in q^(1/D)). Body
// entries past body.size() are zero.
class QSeries {
public:
    QSeries();
    QSeries(int L, long D, Rational offset, CycloElem scale, std::vector<ZCyclo> body,
            std::optional<Rational> until);

    static QSeries constant(const CycloElem& c);
    static QSeries constant(const Rational& c) { return constant(CycloElem(1, c)); }
    // q^e, exact.
    static QSeries monomial(const Rational& e);

    int level() const { return L_; }
    long lattice() const { return D_; }
    const Rational& offset() const { return offset_; }
    const CycloElem& scale() const { return scale_; }
    const std::vector<ZCyclo>& body() const { return body_; }
    const std::optional<Rational>& until() const { return until_; }

    // Coefficient of q^e; throws PrecisionExhausted for e >= until().
    CycloElem coefficient(const Rational& e) const;
    // Lowest exponent with a nonzero coefficient among the known terms.
    std::optional<Rational> leading_exponent() const;
    // All known coefficients vanish.
    bool is_zero() const;

    QSeries operator*(const QSeries& o) const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator-() const;
    QSeries operator*(const CycloElem& c) const;
    QSeries operator*(const Rational& c) const;
    // Throws DivByNonUnit unless the leading coefficient is a unit of Z[zeta]
    // up to a scalar, and PrecisionExhausted if no coefficient is known nonzero.
    QSeries inverse() const;
    QSeries operator/(const QSeries& o) const { return *this * o.inverse(); }
    QSeries pow(long k) const;
    // q -> q^r for rational r > 0.
    QSeries dilate(const Rational& r) const;
    // Forget terms with exponent >= e.
    QSeries truncate(const Rational& e) const;

    QSeries with_level(int M) const;
    QSeries with_lattice(long M) const;

    std::string str(int terms = 6) const;

private:
    void normalize();
    long known_terms() const; // lattice positions below until(), or body size when exact

    int L_ = 1;
    long D_ = 1;
    Rational offset_ = 0;
    CycloElem scale_;
    std::vector<ZCyclo> body_;
    std::optional<Rational> until_;
};

// Sum of c_i T^i for a polynomial with rational coefficients (ascending).
QSeries evaluate_polynomial(const std::vector<Rational>& coeffs, const QSeries& T);
QSeries evaluate_polynomial(const std::vector<long>& coeffs, const QSeries& T);

// q^(1/24) prod_{n>=1} (1 - q^n), known for exponents < 1/24 + K.
QSeries eta_series(long K);

// Generalized Dedekind eta function E_{g,h}^(N), known for exponents below
// its offset plus K. Throws BothZero when g = h = 0 mod N.
QSeries gen_eta_series(int N, long g, long h, long K);

// Lowest exponent where a and b differ among terms known for both; empty if
// they agree to the common precision.
std::optional<Rational> first_mismatch(const QSeries& a, const QSeries& b);

} // namespace ecp
