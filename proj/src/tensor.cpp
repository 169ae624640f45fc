#include "ecpair/tensor.hpp"

#include "ecpair/errors.hpp"

#include <numeric>

namespace ecp {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

QmodZ::QmodZ(std::int64_t num, std::int64_t den) {
    if (den == 0) fail("DomainError", "QmodZ with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    num = floor_mod(num, den);
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = den;
    num_ = num / g;
    den_ = den / g;
    if (num_ == 0) den_ = 1;
}

QmodZ QmodZ::operator+(const QmodZ& o) const {
    std::int64_t l = std::lcm(den_, o.den_);
    return QmodZ(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

QmodZ QmodZ::operator-(const QmodZ& o) const { return *this + (-o); }

QmodZ QmodZ::operator-() const { return QmodZ(-num_, den_); }

QmodZ QmodZ::operator*(std::int64_t k) const { return QmodZ(floor_mod(num_ * floor_mod(k, den_), den_), den_); }

std::string QmodZ::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

QmodZ QmodZ::parse(const std::string& text) {
    Rational r = parse_rational(text);
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        fail("ParseError", "Q/Z value out of range: " + text);
    return QmodZ(r.get_num().get_si(), r.get_den().get_si());
}

FactoredRational FactoredRational::from_integer(const Integer& n, const FactorOptions& opts) {
    if (n == 0) fail("DomainError", "zero has no factorization");
    FactoredRational out;
    out.sign = n < 0 ? -1 : 1;
    out.exponents = factor_integer(n, opts);
    return out;
}

FactoredRational FactoredRational::from_rational(const Rational& r, const FactorOptions& opts) {
    if (r == 0) fail("DomainError", "zero has no factorization");
    FactoredRational num = from_integer(r.get_num(), opts);
    if (r.get_den() != 1) num *= from_integer(r.get_den(), opts).inverse();
    return num;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    sign *= o.sign;
    for (const auto& [p, e] : o.exponents) {
        long& slot = exponents[p];
        slot += e;
        if (slot == 0) exponents.erase(p);
    }
    return *this;
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    FactoredRational out = *this;
    out *= o;
    return out;
}

FactoredRational FactoredRational::inverse() const {
    FactoredRational out;
    out.sign = sign;
    for (const auto& [p, e] : exponents) out.exponents[p] = -e;
    return out;
}

FactoredRational FactoredRational::pow(long k) const {
    FactoredRational out;
    out.sign = (k % 2 != 0) ? sign : 1;
    if (k == 0) return out;
    for (const auto& [p, e] : exponents) out.exponents[p] = e * k;
    return out;
}

Rational FactoredRational::value() const {
    Integer num = 1, den = 1;
    for (const auto& [p, e] : exponents) {
        if (e > 0) num *= ipow(p, static_cast<unsigned long>(e));
        else den *= ipow(p, static_cast<unsigned long>(-e));
    }
    Rational out(num * sign, den);
    out.canonicalize();
    return out;
}

FactoredRational FactoredRational::mod_powers(long n) const {
    FactoredRational out;
    out.sign = (n % 2 == 0) ? sign : 1;
    for (const auto& [p, e] : exponents) {
        long r = e % n;
        if (r < 0) r += n;
        if (r != 0) out.exponents[p] = r;
    }
    return out;
}

QmodZ TensorClass::component(const Integer& p) const {
    auto it = comps_.find(p);
    return it == comps_.end() ? QmodZ() : it->second;
}

void TensorClass::add_component(const Integer& p, const QmodZ& v) {
    auto it = comps_.find(p);
    if (it == comps_.end()) {
        if (!v.is_zero()) comps_.emplace(p, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) comps_.erase(it);
}

std::vector<Integer> TensorClass::support() const {
    std::vector<Integer> out;
    for (const auto& kv : comps_) out.push_back(kv.first);
    return out;
}

TensorClass& TensorClass::operator+=(const TensorClass& o) {
    for (const auto& [p, v] : o.comps_) add_component(p, v);
    return *this;
}

TensorClass TensorClass::operator+(const TensorClass& o) const {
    TensorClass out = *this;
    out += o;
    return out;
}

TensorClass TensorClass::operator-() const {
    TensorClass out;
    for (const auto& [p, v] : comps_) out.comps_.emplace(p, -v);
    return out;
}

TensorClass TensorClass::operator-(const TensorClass& o) const { return *this + (-o); }

TensorClass TensorClass::operator*(std::int64_t k) const {
    TensorClass out;
    for (const auto& [p, v] : comps_) out.add_component(p, v * k);
    return out;
}

std::string TensorClass::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [p, v] : comps_) {
        if (!first) s += ", ";
        first = false;
        s += p.get_str() + ": " + v.str();
    }
    return s + "}";
}

TensorClass tensor_of(const FactoredRational& z, const QmodZ& r) {
    TensorClass out;
    if (r.is_zero()) return out;
    for (const auto& [p, e] : z.exponents) out.add_component(p, r * e);
    return out;
}

TensorClass tensor_of(const Rational& z, const QmodZ& r, const FactorOptions& opts) {
    if (z == 0) fail("DomainError", "tensor of zero");
    if (r.is_zero()) return {};
    return tensor_of(FactoredRational::from_rational(z, opts), r);
}

bool is_power_up_to_sign(const FactoredRational& z, long M) {
    if (M <= 0) fail("DomainError", "power exponent must be positive");
    for (const auto& kv : z.exponents)
        if (kv.second % M != 0) return false;
    return true;
}

bool is_power_up_to_sign(const Rational& z, long M, const FactorOptions& opts) {
    if (z == 0) fail("DomainError", "zero is excluded");
    return is_power_up_to_sign(FactoredRational::from_rational(z, opts), M);
}

std::int64_t order_of(const TensorClass& c) {
    std::int64_t l = 1;
    for (const auto& kv : c.components()) l = std::lcm(l, kv.second.order());
    return l;
}

} // namespace ecp
