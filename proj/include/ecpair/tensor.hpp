#pragma once

#include "ecpair/factor.hpp"
#include "ecpair/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ecp {

// Element of Q/Z stored as num/den with 0 <= num < den and gcd(num, den) = 1.
class QmodZ {
public:
    QmodZ() = default;
    QmodZ(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    // Additive order in Q/Z, i.e. the reduced denominator.
    std::int64_t order() const { return den_; }

    QmodZ operator+(const QmodZ& o) const;
    QmodZ operator-(const QmodZ& o) const;
    QmodZ operator-() const;
    QmodZ operator*(std::int64_t k) const;
    bool operator==(const QmodZ& o) const = default;

    std::string str() const;
    static QmodZ parse(const std::string& text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Nonzero rational held as sign * prod p^e.
struct FactoredRational {
    int sign = 1;
    std::map<Integer, long> exponents;

    static FactoredRational from_rational(const Rational& r, const FactorOptions& opts = {});
    static FactoredRational from_integer(const Integer& n, const FactorOptions& opts = {});

    FactoredRational& operator*=(const FactoredRational& o);
    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational inverse() const;
    FactoredRational pow(long k) const;
    Rational value() const;
    bool operator==(const FactoredRational& o) const = default;

    // Representative of the class in Q^x / (Q^x)^n: exponents reduced to
    // [0, n) and, for odd n, the sign dropped (-1 is an n-th power).
    FactoredRational mod_powers(long n) const;
};

// Element of Q^x (x) Q/Z, stored as its p-components in the direct sum over
// primes. Zero components are never stored.
class TensorClass {
public:
    TensorClass() = default;

    const std::map<Integer, QmodZ>& components() const { return comps_; }
    QmodZ component(const Integer& p) const;
    void add_component(const Integer& p, const QmodZ& v);

    bool is_zero() const { return comps_.empty(); }
    std::vector<Integer> support() const;

    TensorClass operator+(const TensorClass& o) const;
    TensorClass operator-(const TensorClass& o) const;
    TensorClass operator-() const;
    TensorClass operator*(std::int64_t k) const;
    TensorClass& operator+=(const TensorClass& o);
    bool operator==(const TensorClass& o) const { return comps_ == o.comps_; }

    std::string str() const;

private:
    std::map<Integer, QmodZ> comps_;
};

// z (x) r for nonzero z.
TensorClass tensor_of(const Rational& z, const QmodZ& r, const FactorOptions& opts = {});
TensorClass tensor_of(const FactoredRational& z, const QmodZ& r);

// True iff z = +-s^M for some rational s.
bool is_power_up_to_sign(const Rational& z, long M, const FactorOptions& opts = {});
bool is_power_up_to_sign(const FactoredRational& z, long M);

// lcm of component orders; 1 for the zero class.
std::int64_t order_of(const TensorClass& c);

} // namespace ecp
