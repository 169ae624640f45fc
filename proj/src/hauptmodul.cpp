#include "ecpair/hauptmodul.hpp"

#include "ecpair/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <regex>
#include <thread>

namespace ecp {

namespace {

struct Which {
    std::string kind;
    int N = 0;
    int M = 1;
};

Which parse_which(const std::string& text) {
    static const std::regex re(R"((t|u|f|a|b|tu)(\d+))");
    static const std::regex sre(R"(s(\d+)/(\d+))");
    std::smatch m;
    Which w;
    if (std::regex_match(text, m, sre)) {
        w.kind = "s";
        w.N = std::stoi(m[1].str());
        w.M = std::stoi(m[2].str());
    } else if (std::regex_match(text, m, re)) {
        w.kind = m[1].str();
        w.N = std::stoi(m[2].str());
    } else {
        fail("UnsupportedCombination", "unknown name: " + text);
    }
    return w;
}

bool is_cyclic_order(int N) {
    const auto& v = cyclic_orders();
    return std::find(v.begin(), v.end(), N) != v.end();
}

bool is_bicyclic_order(int N) { return N == 2 || N == 4 || N == 6 || N == 8; }

// eta(k tau) known for exponents below its offset plus K.
QSeries eta_at(const Rational& k, long K) {
    Rational need = Rational(K) / k;
    long base = static_cast<long>(need.get_d()) + 2;
    return eta_series(base).dilate(k).truncate(k / 24 + K);
}

QSeries E0(int N, long h, long K) { return gen_eta_series(N, 0, h, K); }

QSeries E0_half(int N, long h, long K) { return gen_eta_series(N, 0, h, 2 * K + 1).dilate(Rational(1, 2)); }

QSeries ratio_base(int N, long K) { return E0(N, 1, K) * E0(N, 3, K) / E0(N, 2, K).pow(2); }

QSeries t_series(int N, long K) {
    auto e = [&](long k, long p) { return eta_at(k, K).pow(p); };
    switch (N) {
    case 2: return e(1, 24) / e(2, 24) * Rational(1, 64);
    case 3: return e(1, 12) / e(3, 12) * Rational(1, 27);
    case 4: return e(1, 16) * e(4, 8) / e(2, 24) * Rational(1, 16);
    case 5: return -(E0(5, 1, K).pow(5) / E0(5, 2, K).pow(5));
    case 6: return e(1, 8) * e(6, 4) / (e(3, 8) * e(2, 4)) * Rational(1, 9);
    case 7: return E0(7, 1, K).pow(3) / (E0(7, 2, K).pow(2) * E0(7, 3, K)) * CycloElem::zeta(7, 2);
    case 8: return E0(8, 1, K).pow(2) / E0(8, 3, K).pow(2) * CycloElem::zeta(8, 2);
    case 9: return E0(9, 1, K).pow(2) / (E0(9, 2, K) * E0(9, 4, K)) * CycloElem::zeta(9, 2);
    case 10: return E0(10, 1, K) * E0(10, 2, K) / (E0(10, 3, K) * E0(10, 4, K)) * CycloElem::zeta(10, 2);
    case 12: return E0(12, 1, K) / E0(12, 5, K) * CycloElem::zeta(12, 2);
    default: fail("UnsupportedCombination", "no hauptmodul t for N = " + std::to_string(N));
    }
}

QSeries u_series(int N, long K) {
    auto e = [&](const Rational& k, long p) { return eta_at(k, K).pow(p); };
    const Rational half(1, 2);
    switch (N) {
    case 2: return e(half, 16) * e(2, 8) / e(1, 24);
    case 4: return e(half, 8) * e(2, 4) / e(1, 12);
    case 6: return e(half, 4) * e(3, 2) / (e(Rational(3, 2), 4) * e(1, 2)) * Rational(1, 3);
    case 8: return E0_half(8, 1, K) / E0_half(8, 3, K) * CycloElem::zeta(8, 1);
    default: fail("UnsupportedCombination", "no hauptmodul u for N = " + std::to_string(N));
    }
}

QSeries a_series(int N, long K) {
    if (N == 4) return QSeries::constant(Rational(0));
    return E0(N, 1, K).pow(4) * E0(N, 4, K) / E0(N, 2, K).pow(5) * CycloElem::zeta(N, 1);
}

QSeries b_series(int N, long K) {
    return E0(N, 1, K).pow(5) * E0(N, 3, K).pow(3) / E0(N, 2, K).pow(8) * CycloElem::zeta(N, 1);
}

QSeries power_of(const std::vector<long>& p, long e, const QSeries& T) { return evaluate_polynomial(p, T).pow(e); }

// S * prod_{e<0} p(T)^(-e) and c * prod_{e>0} p(T)^e.
std::pair<QSeries, QSeries> cross_multiply(const QSeries& S, const RatFunc& R, const QSeries& T) {
    QSeries lhs = S;
    QSeries rhs = QSeries::constant(R.constant);
    if (R.constant == 0) return {lhs, rhs};
    for (const auto& [p, e] : R.factors) {
        if (e < 0) lhs = lhs * power_of(p, -e, T);
        else rhs = rhs * power_of(p, e, T);
    }
    return {lhs, rhs};
}

std::pair<QSeries, QSeries> identity_sides(const Which& w, long W) {
    if (w.kind == "f") {
        if (!is_cyclic_order(w.N)) fail("UnsupportedCombination", "f" + std::to_string(w.N));
        return cross_multiply(ratio_base(w.N, W).pow(w.N), modular_f_table(w.N), t_series(w.N, W));
    }
    if (w.kind == "tu") {
        if (!is_bicyclic_order(w.N)) fail("UnsupportedCombination", "tu" + std::to_string(w.N));
        return cross_multiply(t_series(w.N, W), t_of_u_table(w.N), u_series(w.N, W));
    }
    if (w.kind == "a" || w.kind == "b") {
        if (!is_cyclic_order(w.N)) fail("UnsupportedCombination", w.kind + std::to_string(w.N));
        const RatFunc& R = w.kind == "a" ? tate_a_table(w.N) : tate_b_table(w.N);
        QSeries S = w.kind == "a" ? a_series(w.N, W) : b_series(w.N, W);
        return cross_multiply(S, R, t_series(w.N, W));
    }
    if (w.kind == "s") {
        if (!is_cyclic_order(w.N) || w.M < 1 || w.N % w.M)
            fail("UnsupportedCombination", "s" + std::to_string(w.N) + "/" + std::to_string(w.M));
        QSeries T = t_series(w.N, W);
        QSeries s = ratio_base(w.N, W).pow(w.N / w.M);
        QSeries lhs = s.pow(w.M);
        for (const auto& [p, e] : s_correction(w.N).factors) lhs = lhs * power_of(p, e * w.N, T);
        auto [l2, rhs] = cross_multiply(lhs, f_table(w.N), T);
        return {l2, rhs};
    }
    fail("UnsupportedCombination", "not an identity: " + w.kind);
}

} // namespace

const RatFunc& s_correction(int N) {
    static const RatFunc one{1, {}};
    static const RatFunc c8{1, {{{1, 1}, 1}}};
    static const RatFunc c10{1, {{{1, 1}, 1}, {{1, 1, -1}, 1}}};
    if (N == 8 || N == 12) return c8;
    if (N == 10) return c10;
    return one;
}

QSeries hauptmodul_series(const std::string& which, long K) {
    Which w = parse_which(which);
    if (w.kind == "t") return t_series(w.N, K);
    if (w.kind == "u") return u_series(w.N, K);
    if (w.kind == "f" || w.kind == "s") {
        if (!is_cyclic_order(w.N) || w.M < 1 || w.N % w.M) fail("UnsupportedCombination", which);
        return ratio_base(w.N, K).pow(w.N / w.M);
    }
    if (w.kind == "a" || w.kind == "b") {
        if (!is_cyclic_order(w.N)) fail("UnsupportedCombination", which);
        return w.kind == "a" ? a_series(w.N, K) : b_series(w.N, K);
    }
    fail("UnsupportedCombination", which);
}

IdentityResult verify_identity(const std::string& id, long K) {
    if (K < 1) fail("DomainError", "precision must be positive");
    Which w = parse_which(id);
    IdentityResult out;
    out.id = id;
    out.precision = K;
    long W = K;
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto [lhs, rhs] = identity_sides(w, W);
        QSeries diff = lhs - rhs;
        std::optional<Rational> lead;
        for (const auto* s : {&lhs, &rhs}) {
            auto e = s->leading_exponent();
            if (e && (!lead || *e < *lead)) lead = e;
        }
        if (!lead) {
            if (!lhs.until() && !rhs.until()) {
                out.pass = true; // both sides are exactly zero
                return out;
            }
            fail("PrecisionExhausted", id + ": both sides vanish to the known precision");
        }
        Rational target = *lead + K;
        if (diff.until() && *diff.until() < target) {
            Rational gap = target - *diff.until();
            W += static_cast<long>(gap.get_d()) + 2;
            continue;
        }
        auto mis = diff.truncate(target).leading_exponent();
        out.pass = !mis.has_value();
        out.mismatch = mis;
        return out;
    }
    fail("PrecisionExhausted", id + ": could not reach precision " + std::to_string(K));
}

std::vector<std::string> identity_names() {
    std::vector<std::string> out;
    for (int N : cyclic_orders()) out.push_back("f" + std::to_string(N));
    for (int N : {2, 4, 6, 8}) out.push_back("tu" + std::to_string(N));
    for (int N : cyclic_orders()) {
        out.push_back("a" + std::to_string(N));
        out.push_back("b" + std::to_string(N));
    }
    for (int N : cyclic_orders())
        for (int M = 1; M <= N; ++M)
            if (N % M == 0) out.push_back("s" + std::to_string(N) + "/" + std::to_string(M));
    return out;
}

std::vector<IdentityResult> verify_identities(const std::vector<std::string>& ids, long K, int jobs) {
    std::vector<IdentityResult> out(ids.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < ids.size();) {
            try {
                out[i] = verify_identity(ids[i], K);
            } catch (const MathError& e) {
                out[i].id = ids[i];
                out[i].precision = K;
                out[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

} // namespace ecp
