#include "ecpair/cyclotomic.hpp"

#include "ecpair/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ecp {

namespace {

// Exact division of integer polynomials, b monic.
ZPoly exact_div(ZPoly a, const ZPoly& b) {
    long db = degree(b);
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    for (long i = degree(a); i >= db; --i) {
        Integer c = a[i];
        q[i - db] = c;
        for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

} // namespace

const ZPoly& cyclotomic_polynomial(int L) {
    static std::map<int, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
    if (L < 1) fail("DomainError", "cyclotomic level must be positive");
    ZPoly f(L + 1);
    f[0] = -1;
    f[L] = 1;
    for (int d = 1; d < L; ++d) {
        if (L % d) continue;
        ZPoly phi_d;
        auto jt = cache.find(d);
        if (jt != cache.end()) {
            phi_d = jt->second;
        } else {
            // Proper divisors of d were visited earlier in this loop.
            ZPoly g(d + 1);
            g[0] = -1;
            g[d] = 1;
            for (int e = 1; e < d; ++e)
                if (d % e == 0) g = exact_div(g, cache.at(e));
            trim(g);
            cache[d] = g;
            phi_d = g;
        }
        f = exact_div(f, phi_d);
    }
    trim(f);
    return cache[L] = f;
}

int euler_phi(int L) {
    int out = L, n = L;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        out -= out / p;
    }
    if (n > 1) out -= out / n;
    return out;
}

CycloRing::CycloRing(int L) : L_(L), phi_(euler_phi(L)) {
    const ZPoly& P = cyclotomic_polynomial(L);
    Phi_.reserve(P.size());
    for (const auto& c : P) Phi_.push_back(c.get_si());
}

ZCyclo CycloRing::one() const {
    ZCyclo z(phi_);
    z[0] = 1;
    return z;
}

ZCyclo CycloRing::zeta_power(long k) const {
    std::vector<Integer> raw(L_);
    raw[((k % L_) + L_) % L_] = 1;
    return reduce(std::move(raw));
}

ZCyclo CycloRing::reduce(std::vector<Integer> raw) const {
    for (long i = static_cast<long>(raw.size()) - 1; i >= phi_; --i) {
        if (raw[i] == 0) continue;
        Integer c = raw[i];
        for (int j = 0; j < phi_; ++j)
            if (Phi_[j] != 0) raw[i - phi_ + j] -= c * Phi_[j];
        raw[i] = 0;
    }
    raw.resize(phi_);
    return raw;
}

void CycloRing::mul_acc(std::vector<Integer>& raw, const ZCyclo& a, const ZCyclo& b) const {
    for (int i = 0; i < phi_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < phi_; ++j)
            if (b[j] != 0) mpz_addmul(raw[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

ZCyclo CycloRing::mul(const ZCyclo& a, const ZCyclo& b) const {
    std::vector<Integer> raw(2 * phi_ - 1);
    mul_acc(raw, a, b);
    return reduce(std::move(raw));
}

ZCyclo CycloRing::times_zeta(const ZCyclo& a, long k) const {
    k = ((k % L_) + L_) % L_;
    std::vector<Integer> raw(phi_ + k);
    for (int i = 0; i < phi_; ++i) raw[i + k] = a[i];
    // Reduce modulo x^L - 1 first to keep the buffer short.
    std::vector<Integer> wrapped(std::max<long>(phi_, std::min<long>(raw.size(), L_)));
    for (size_t i = 0; i < raw.size(); ++i) wrapped[i % L_] += raw[i];
    return reduce(std::move(wrapped));
}

ZCyclo CycloRing::embed(const ZCyclo& a, int M) const {
    if (M % L_) fail("DomainError", "cannot embed level " + std::to_string(L_) + " into " + std::to_string(M));
    CycloRing big(M);
    std::vector<Integer> raw(M);
    int step = M / L_;
    for (int i = 0; i < phi_; ++i) raw[(i * step) % M] += a[i];
    return big.reduce(std::move(raw));
}

std::vector<std::vector<Rational>> CycloRing::mult_matrix(const ZCyclo& a) const {
    std::vector<std::vector<Rational>> m(phi_, std::vector<Rational>(phi_));
    ZCyclo col = a;
    for (int i = 0; i < phi_; ++i) {
        for (int r = 0; r < phi_; ++r) m[r][i] = col[r];
        col = times_zeta(col, 1);
    }
    return m;
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) fail("DivByNonUnit", "singular linear system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rational f = A[r][col] / A[col][col];
            for (size_t k = col; k < n; ++k) A[r][k] -= f * A[col][k];
            b[r] -= f * b[col];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= A[i][i];
    return b;
}

Rational determinant(std::vector<std::vector<Rational>> A) {
    size_t n = A.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (A[r][col] == 0) continue;
            Rational f = A[r][col] / A[col][col];
            for (size_t k = col; k < n; ++k) A[r][k] -= f * A[col][k];
        }
    }
    return det;
}

// ---------------------------------------------------------------------------

CycloElem::CycloElem(int L, const Rational& r) : L_(L), c_(euler_phi(L)) { c_[0] = r; }

CycloElem CycloElem::zeta(int L, long k) { return from_integral(L, CycloRing(L).zeta_power(k)); }

CycloElem CycloElem::from_integral(int L, const ZCyclo& z, const Rational& scale) {
    CycloElem out(L);
    for (size_t i = 0; i < z.size(); ++i) out.c_[i] = Rational(z[i]) * scale;
    return out;
}

bool CycloElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

namespace {
std::pair<CycloElem, CycloElem> common(const CycloElem& a, const CycloElem& b) {
    if (a.level() == b.level()) return {a, b};
    int M = std::lcm(a.level(), b.level());
    return {a.embed(M), b.embed(M)};
}
} // namespace

CycloElem CycloElem::operator+(const CycloElem& o) const {
    auto [x, y] = common(*this, o);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycloElem CycloElem::operator-(const CycloElem& o) const { return *this + (-o); }

CycloElem CycloElem::operator-() const {
    CycloElem out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

CycloElem CycloElem::operator*(const Rational& r) const {
    CycloElem out = *this;
    for (auto& x : out.c_) x *= r;
    return out;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    auto [x, y] = common(*this, o);
    auto [xn, xd] = x.integral_form();
    auto [yn, yd] = y.integral_form();
    CycloRing R(x.L_);
    return from_integral(x.L_, R.mul(xn, yn), Rational(1) / Rational(xd * yd));
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) fail("DivByNonUnit", "inverse of zero");
    auto [n, d] = integral_form();
    CycloRing R(L_);
    std::vector<Rational> e(R.dim());
    e[0] = 1;
    auto x = solve_linear(R.mult_matrix(n), e);
    CycloElem out(L_);
    for (size_t i = 0; i < x.size(); ++i) out.c_[i] = x[i] * d;
    return out;
}

CycloElem CycloElem::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycloElem out(L_, 1), base = *this;
    while (k) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

bool CycloElem::operator==(const CycloElem& o) const {
    auto [x, y] = common(*this, o);
    return x.c_ == y.c_;
}

CycloElem CycloElem::embed(int M) const {
    if (M == L_) return *this;
    auto [n, d] = integral_form();
    return from_integral(M, CycloRing(L_).embed(n, M), Rational(1) / Rational(d));
}

Rational CycloElem::norm() const {
    auto [n, d] = integral_form();
    CycloRing R(L_);
    return determinant(R.mult_matrix(n)) / Rational(ipow(d, R.dim()));
}

std::pair<ZCyclo, Integer> CycloElem::integral_form() const {
    Integer d = 1;
    for (const auto& x : c_) d = lcm(d, Integer(x.get_den()));
    ZCyclo n(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) n[i] = Integer(c_[i] * d);
    return {n, d};
}

std::string CycloElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].get_str() << ")";
        if (i == 1) os << "z";
        if (i > 1) os << "z^" << i;
    }
    if (first) os << "0";
    if (L_ > 1) os << " [z = zeta_" << L_ << "]";
    return os.str();
}

} // namespace ecp
