#pragma once

#include "ecpair/poly.hpp"
#include "ecpair/rational.hpp"

#include <string>
#include <vector>

namespace ecp {

// Phi_L with integer coefficients, ascending.
const ZPoly& cyclotomic_polynomial(int L);
int euler_phi(int L);

// Integer element of Z[zeta_L] in the power basis 1, zeta, ..., zeta^(phi-1).
using ZCyclo = std::vector<Integer>;

// Arithmetic helpers for Z[zeta_L]; all results are reduced.
class CycloRing {
public:
    explicit CycloRing(int L);
    int level() const { return L_; }
    int dim() const { return phi_; }
    ZCyclo zero() const { return ZCyclo(phi_); }
    ZCyclo one() const;
    ZCyclo zeta_power(long k) const;
    // Reduce a polynomial in zeta (any length) modulo Phi_L.
    ZCyclo reduce(std::vector<Integer> raw) const;
    ZCyclo mul(const ZCyclo& a, const ZCyclo& b) const;
    // Accumulate a * b into a raw (unreduced) buffer of length 2*phi - 1.
    void mul_acc(std::vector<Integer>& raw, const ZCyclo& a, const ZCyclo& b) const;
    ZCyclo times_zeta(const ZCyclo& a, long k) const;
    // zeta_L -> zeta_M^(M/L) for L | M.
    ZCyclo embed(const ZCyclo& a, int M) const;
    // Multiplication-by-a matrix (columns are a * zeta^i).
    std::vector<std::vector<Rational>> mult_matrix(const ZCyclo& a) const;

private:
    int L_;
    int phi_;
    std::vector<long> Phi_; // monic, ascending
};

// Element of Q(zeta_L).
class CycloElem {
public:
    CycloElem() : CycloElem(1) {}
    explicit CycloElem(int L, const Rational& r = 0);
    static CycloElem zeta(int L, long k);
    static CycloElem from_integral(int L, const ZCyclo& z, const Rational& scale = 1);

    int level() const { return L_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator*(const Rational& r) const;
    // Throws DivByNonUnit for zero.
    CycloElem inverse() const;
    CycloElem pow(long k) const;
    bool operator==(const CycloElem& o) const;
    CycloElem embed(int M) const;
    // Norm down to Q.
    Rational norm() const;
    // (integral numerator, positive denominator) with self = num / den.
    std::pair<ZCyclo, Integer> integral_form() const;
    std::string str() const;

private:
    int L_;
    std::vector<Rational> c_;
};

// Solve A x = b over Q; A square and invertible (throws DivByNonUnit otherwise).
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b);
Rational determinant(std::vector<std::vector<Rational>> A);

} // namespace ecp
