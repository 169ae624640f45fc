#include "ecpair/qseries.hpp"

#include "ecpair/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ecp {

namespace {

bool is_zero(const ZCyclo& z) {
    for (const auto& x : z)
        if (x != 0) return false;
    return true;
}

long ceil_long(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

std::optional<Rational> min_until(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

} // namespace

QSeries::QSeries() : scale_(1, 1) {}

QSeries::QSeries(int L, long D, Rational offset, CycloElem scale, std::vector<ZCyclo> body,
                 std::optional<Rational> until)
    : L_(L), D_(D), offset_(std::move(offset)), scale_(std::move(scale)), body_(std::move(body)),
      until_(std::move(until)) {
    if (scale_.level() != L_) scale_ = scale_.embed(L_);
    normalize();
}

QSeries QSeries::constant(const CycloElem& c) {
    CycloRing R(c.level());
    return QSeries(c.level(), 1, 0, c, {R.one()}, std::nullopt);
}

QSeries QSeries::monomial(const Rational& e) {
    CycloRing R(1);
    return QSeries(1, 1, e, CycloElem(1, 1), {R.one()}, std::nullopt);
}

void QSeries::normalize() {
    long n = known_terms();
    if (static_cast<long>(body_.size()) > n) body_.resize(n);
    size_t lead = 0;
    while (lead < body_.size() && ecp::is_zero(body_[lead])) ++lead;
    if (lead == body_.size() || scale_.is_zero()) {
        body_.clear();
        return;
    }
    if (lead > 0) {
        body_.erase(body_.begin(), body_.begin() + lead);
        offset_ += frac(static_cast<long>(lead), D_);
    }
    while (!body_.empty() && ecp::is_zero(body_.back())) body_.pop_back();
}

long QSeries::known_terms() const {
    if (!until_) return static_cast<long>(body_.size());
    Rational span = (*until_ - offset_) * D_;
    return std::max(0L, ceil_long(span));
}

CycloElem QSeries::coefficient(const Rational& e) const {
    if (until_ && e >= *until_) fail("PrecisionExhausted", "coefficient of q^" + e.get_str() + " is not known");
    Rational k = (e - offset_) * D_;
    if (k < 0 || k.get_den() != 1) return CycloElem(L_);
    long idx = k.get_num().get_si();
    if (idx >= static_cast<long>(body_.size())) return CycloElem(L_);
    return scale_ * CycloElem::from_integral(L_, body_[idx]);
}

std::optional<Rational> QSeries::leading_exponent() const {
    if (body_.empty()) return std::nullopt;
    return offset_;
}

bool QSeries::is_zero() const { return body_.empty(); }

QSeries QSeries::with_level(int M) const {
    if (M == L_) return *this;
    CycloRing R(L_);
    std::vector<ZCyclo> body;
    body.reserve(body_.size());
    for (const auto& c : body_) body.push_back(R.embed(c, M));
    return QSeries(M, D_, offset_, scale_.embed(M), std::move(body), until_);
}

QSeries QSeries::with_lattice(long M) const {
    if (M == D_) return *this;
    if (M % D_) fail("DomainError", "lattice refinement must be a multiple");
    long step = M / D_;
    CycloRing R(L_);
    std::vector<ZCyclo> body(body_.empty() ? 0 : (body_.size() - 1) * step + 1, R.zero());
    for (size_t i = 0; i < body_.size(); ++i) body[i * step] = body_[i];
    return QSeries(L_, M, offset_, scale_, std::move(body), until_);
}

namespace {

std::pair<QSeries, QSeries> common_frame(const QSeries& a, const QSeries& b, bool align_offsets) {
    int L = std::lcm(a.level(), b.level());
    long D = std::lcm(a.lattice(), b.lattice());
    if (align_offsets) {
        Rational diff = b.offset() - a.offset();
        D = std::lcm(D, diff.get_den().get_si());
    }
    return {a.with_level(L).with_lattice(D), b.with_level(L).with_lattice(D)};
}

} // namespace

QSeries QSeries::operator*(const QSeries& o) const {
    auto [a, b] = common_frame(*this, o, false);
    CycloRing R(a.L_);
    Rational off = a.offset_ + b.offset_;
    std::optional<Rational> until;
    if (a.until_) until = b.offset_ + *a.until_;
    if (b.until_) until = min_until(until, a.offset_ + *b.until_);
    if (a.body_.empty() || b.body_.empty()) return QSeries(a.L_, a.D_, off, CycloElem(a.L_, 1), {}, until);
    long n = static_cast<long>(a.body_.size() + b.body_.size() - 1);
    if (until) n = std::min(n, std::max(0L, ceil_long((*until - off) * a.D_)));
    std::vector<char> nzb(b.body_.size());
    for (size_t j = 0; j < b.body_.size(); ++j) nzb[j] = !ecp::is_zero(b.body_[j]);
    std::vector<ZCyclo> body(n);
    std::vector<Integer> raw(2 * R.dim() - 1);
    long sa = static_cast<long>(a.body_.size()), sb = static_cast<long>(b.body_.size());
    for (long k = 0; k < n; ++k) {
        for (auto& x : raw) x = 0;
        long lo = std::max(0L, k - sb + 1), hi = std::min(k, sa - 1);
        bool any = false;
        for (long i = lo; i <= hi; ++i) {
            if (!nzb[k - i]) continue;
            R.mul_acc(raw, a.body_[i], b.body_[k - i]);
            any = true;
        }
        body[k] = any ? R.reduce(raw) : R.zero();
    }
    return QSeries(a.L_, a.D_, off, a.scale_ * b.scale_, std::move(body), until);
}

QSeries QSeries::operator+(const QSeries& o) const {
    if (o.body_.empty() && !o.until_) return *this;
    if (body_.empty() && !until_) return o;
    auto [a, b] = common_frame(*this, o, true);
    CycloRing R(a.L_);
    std::optional<Rational> until = min_until(a.until_, b.until_);
    Rational off = std::min(a.offset_, b.offset_);
    if (a.body_.empty()) off = b.offset_;
    if (b.body_.empty()) off = a.offset_;
    long sha = Rational((a.offset_ - off) * a.D_).get_num().get_si();
    long shb = Rational((b.offset_ - off) * a.D_).get_num().get_si();
    long n = std::max(sha + static_cast<long>(a.body_.size()), shb + static_cast<long>(b.body_.size()));
    if (until) n = std::min(n, std::max(0L, ceil_long((*until - off) * a.D_)));
    if (n <= 0) return QSeries(a.L_, a.D_, off, CycloElem(a.L_, 1), {}, until);
    std::vector<ZCyclo> body(n, R.zero());
    CycloElem scale(a.L_, 1);
    if (a.scale_ == b.scale_) {
        scale = a.scale_;
        for (size_t i = 0; i < a.body_.size() && sha + static_cast<long>(i) < n; ++i) body[sha + i] = a.body_[i];
        for (size_t i = 0; i < b.body_.size() && shb + static_cast<long>(i) < n; ++i) {
            auto& dst = body[shb + i];
            for (size_t r = 0; r < dst.size(); ++r) dst[r] += b.body_[i][r];
        }
    } else {
        auto [na, da] = a.scale_.integral_form();
        auto [nb, db] = b.scale_.integral_form();
        for (auto& x : na) x *= db;
        for (auto& x : nb) x *= da;
        scale = CycloElem(a.L_, Rational(1) / Rational(da * db));
        for (size_t i = 0; i < a.body_.size() && sha + static_cast<long>(i) < n; ++i) body[sha + i] = R.mul(na, a.body_[i]);
        for (size_t i = 0; i < b.body_.size() && shb + static_cast<long>(i) < n; ++i) {
            ZCyclo t = R.mul(nb, b.body_[i]);
            auto& dst = body[shb + i];
            for (size_t r = 0; r < dst.size(); ++r) dst[r] += t[r];
        }
    }
    return QSeries(a.L_, a.D_, off, scale, std::move(body), until);
}

QSeries QSeries::operator-() const { return *this * CycloElem(L_, -1); }

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const CycloElem& c) const {
    int M = std::lcm(L_, c.level());
    QSeries out = with_level(M);
    out.scale_ = out.scale_ * c.embed(M);
    if (out.scale_.is_zero()) out.body_.clear();
    return out;
}

QSeries QSeries::operator*(const Rational& c) const { return *this * CycloElem(L_, c); }

QSeries QSeries::inverse() const {
    if (body_.empty()) {
        if (until_) fail("PrecisionExhausted", "series vanishes to the known precision");
        fail("DivByNonUnit", "inverse of the zero series");
    }
    if (!until_ && body_.size() > 1) fail("PrecisionExhausted", "inverse of an exact non-monomial needs a truncation");
    CycloRing R(L_);
    std::vector<ZCyclo> body = body_;
    CycloElem scale = scale_;
    // Move the content of the leading coefficient out when it divides everything.
    Integer g = 0;
    for (const auto& x : body[0]) g = gcd(g, x);
    if (g != 1) {
        bool divides = true;
        for (const auto& c : body)
            for (const auto& x : c)
                if (!mpz_divisible_p(x.get_mpz_t(), g.get_mpz_t())) divides = false;
        if (!divides) fail("DivByNonUnit", "leading coefficient is not a unit");
        for (auto& c : body)
            for (auto& x : c) x /= g;
        scale = scale * Rational(g);
    }
    CycloElem lead = CycloElem::from_integral(L_, body[0]);
    Rational nm = lead.norm();
    if (nm != 1 && nm != -1) fail("DivByNonUnit", "leading coefficient has norm " + nm.get_str());
    auto [winv, wden] = lead.inverse().integral_form();
    if (wden != 1) fail("DivByNonUnit", "unit inverse is not integral");
    for (auto& c : body) c = R.mul(winv, c);
    scale = scale * lead;
    long n = known_terms();
    std::vector<ZCyclo> inv(n, R.zero());
    inv[0] = R.one();
    std::vector<Integer> raw(2 * R.dim() - 1);
    long sb = static_cast<long>(body.size());
    std::vector<char> nz(sb);
    for (long j = 0; j < sb; ++j) nz[j] = !ecp::is_zero(body[j]);
    for (long k = 1; k < n; ++k) {
        for (auto& x : raw) x = 0;
        for (long j = 1; j <= std::min(k, sb - 1); ++j)
            if (nz[j]) R.mul_acc(raw, body[j], inv[k - j]);
        ZCyclo v = R.reduce(raw);
        for (auto& x : v) x = -x;
        inv[k] = std::move(v);
    }
    std::optional<Rational> until;
    if (until_) until = *until_ - 2 * offset_;
    return QSeries(L_, D_, -offset_, scale.inverse(), std::move(inv), until);
}

QSeries QSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QSeries out = constant(CycloElem(L_, 1)).with_lattice(D_);
    QSeries base = *this;
    bool first = true;
    while (k) {
        if (k & 1) {
            out = first ? base : out * base;
            first = false;
        }
        k >>= 1;
        if (k) base = base * base;
    }
    return out;
}

QSeries QSeries::dilate(const Rational& r) const {
    if (r <= 0) fail("DomainError", "dilation factor must be positive");
    long a = r.get_num().get_si(), b = r.get_den().get_si();
    CycloRing R(L_);
    std::vector<ZCyclo> body(body_.empty() ? 0 : (body_.size() - 1) * a + 1, R.zero());
    for (size_t i = 0; i < body_.size(); ++i) body[i * a] = body_[i];
    std::optional<Rational> until;
    if (until_) until = *until_ * r;
    return QSeries(L_, D_ * b, offset_ * r, scale_, std::move(body), until);
}

QSeries QSeries::truncate(const Rational& e) const {
    QSeries out = *this;
    out.until_ = min_until(until_, e);
    out.normalize();
    return out;
}

std::string QSeries::str(int terms) const {
    std::ostringstream os;
    int shown = 0;
    for (size_t k = 0; k < body_.size() && shown < terms; ++k) {
        if (ecp::is_zero(body_[k])) continue;
        CycloElem c = scale_ * CycloElem::from_integral(L_, body_[k]);
        Rational e = offset_ + frac(static_cast<long>(k), D_);
        if (shown) os << " + ";
        os << "(" << c.str() << ")*q^" << e.get_str();
        ++shown;
    }
    if (!shown) os << "0";
    if (until_) os << " + O(q^" << until_->get_str() << ")";
    return os.str();
}

QSeries evaluate_polynomial(const std::vector<Rational>& coeffs, const QSeries& T) {
    if (coeffs.empty()) return QSeries::constant(Rational(0));
    QSeries acc = QSeries::constant(coeffs.back());
    for (size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * T + QSeries::constant(coeffs[i]);
    return acc;
}

QSeries evaluate_polynomial(const std::vector<long>& coeffs, const QSeries& T) {
    return evaluate_polynomial(std::vector<Rational>(coeffs.begin(), coeffs.end()), T);
}

QSeries eta_series(long K) {
    if (K < 1) fail("DomainError", "precision must be positive");
    CycloRing R(1);
    std::vector<ZCyclo> body(K, R.zero());
    body[0] = R.one();
    for (long m = 1; m < K; ++m)
        for (long k = K - 1; k >= m; --k) body[k][0] -= body[k - m][0];
    Rational off(1, 24);
    return QSeries(1, 1, off, CycloElem(1, 1), std::move(body), off + K);
}

QSeries gen_eta_series(int N, long g, long h, long K) {
    if (N < 2) fail("DomainError", "level must be at least 2");
    if (K < 1) fail("DomainError", "precision must be positive");
    if (g % N == 0 && h % N == 0) fail("BothZero", "g and h are both divisible by N");
    CycloRing R(N);
    long D = N / std::gcd(std::labs(g), static_cast<long>(N));
    long gD = g * D / N; // g/N in lattice units
    Rational x = frac(g, N);
    Rational offset = (x * x - x + Rational(1, 6)) / 2;
    CycloElem scale(N, 1);
    long n = K * D;
    std::vector<ZCyclo> body(n, R.zero());
    body[0] = R.one();
    long len = 1;
    auto times = [&](long j, long s) {
        // body *= (1 - zeta^s q^j), j > 0
        if (j >= n) return;
        long top = std::min(n - 1, len - 1 + j);
        for (long k = top; k >= j; --k) {
            if (ecp::is_zero(body[k - j])) continue;
            ZCyclo t = R.times_zeta(body[k - j], s);
            for (size_t r = 0; r < t.size(); ++r) body[k][r] -= t[r];
        }
        len = std::min(n, len + j);
    };
    auto factor = [&](long e, long s) {
        // (1 - zeta^s q^(e/D))
        if (e > 0) {
            times(e, s);
        } else if (e == 0) {
            scale = scale * (CycloElem(N, 1) - CycloElem::zeta(N, s));
        } else {
            scale = scale * (-CycloElem::zeta(N, s));
            offset += frac(e, D);
            times(-e, -s);
        }
    };
    long mmax = n / D + std::labs(g) / N + 2;
    for (long m = 1; m <= mmax; ++m) {
        factor((m - 1) * D + gD, h);
        factor(m * D - gD, -h);
    }
    return QSeries(N, D, offset, scale, std::move(body), offset + K);
}

std::optional<Rational> first_mismatch(const QSeries& a, const QSeries& b) { return (a - b).leading_exponent(); }

} // namespace ecp
