#include "ecpair/tate.hpp"

#include "ecpair/errors.hpp"
#include "ecpair/factor.hpp"
#include "ecpair/pairing.hpp"
#include "ecpair/reduction.hpp"
#include "ecpair/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace ecp {

namespace {

void require_tame(const TateData& T, long m) {
    if (m <= 0) fail("DomainError", "m must be positive");
    if (T.p <= m && m % T.p.get_si() == 0)
        fail("WildCase", "p = " + T.p.get_str() + " divides m = " + std::to_string(m));
}

Integer modulus(const TateData& T) { return ipow(T.p, static_cast<unsigned long>(T.k)); }

// Unit part of z (z / p^v) reduced modulo M.
Integer unit_mod(const Rational& z, const Integer& p, const Integer& M) {
    long v = valuation(z, p);
    Rational u = z / rpow(Rational(p), v);
    Integer num = u.get_num() % M, den = u.get_den(), inv;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t())) fail("DomainError", "non-unit denominator");
    Integer out = num * inv % M;
    if (out < 0) out += M;
    return out;
}

Integer powmod(const Integer& b, const Integer& e, const Integer& M) {
    Integer out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), M.get_mpz_t());
    return out;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

} // namespace

TateData TateData::make(const Integer& p, const Rational& q, long k) {
    if (!is_certified_prime(p)) fail("DomainError", p.get_str() + " is not prime");
    if (q == 0) fail("DomainError", "q must be nonzero");
    if (k < 1) fail("DomainError", "precision must be positive");
    long n = valuation(q, p);
    if (n <= 0) fail("DomainError", "v_p(q) must be positive");
    return TateData{p, q, n, k};
}

long s_m_of(const TateData& T, const Rational& a, long m) {
    require_tame(T, m);
    if (a == 0) fail("DomainError", "a must be nonzero");
    long v = valuation(a, T.p);
    if ((v * m) % T.n != 0) fail("NotTorsion", "v(a) m / n is not an integer");
    long s = v * m / T.n;
    Rational w = rpow(a, m) / rpow(T.q, s);
    Integer M = modulus(T);
    if (unit_mod(w, T.p, M) != 1) fail("NotTorsion", "a^m q^(-s) is not 1 modulo p^k");
    return mod(s, m);
}

QmodZ tate_pairing_valuation(long m, long s, long s2, long n) {
    if (m <= 0) fail("DomainError", "m must be positive");
    long den = m * m;
    return QmodZ(mod(-(s % den) * (s2 % den) % den * (n % den), den), den);
}

TensorClass tate_pairing_rational(const TateData& T, const Rational& a, const Rational& b, long m) {
    long sb = s_m_of(T, b, m);
    s_m_of(T, a, m);
    if (sb == 0) return TensorClass();
    return tensor_of(FactoredRational::from_rational(a).pow(-sb), QmodZ(1, m));
}

ThreeWay tate_pairing_three_way(const TateData& T, const Rational& a, const Rational& b, long m) {
    long s = s_m_of(T, a, m), s2 = s_m_of(T, b, m);
    ThreeWay out;
    out.from_a = QmodZ(mod(-valuation(a, T.p) * s2, m), m);
    out.from_b = QmodZ(mod(-valuation(b, T.p) * s, m), m);
    out.from_q = tate_pairing_valuation(m, s, s2, T.n);
    return out;
}

bool is_mth_power_local(const TateData& T, const Rational& z, long m) {
    require_tame(T, m);
    if (z == 0) fail("DomainError", "z must be nonzero");
    if (valuation(z, T.p) % m != 0) return false;
    Integer u = unit_mod(z, T.p, T.p);
    Integer pm1 = T.p - 1;
    Integer g = gcd(pm1, Integer(m));
    return powmod(u, pm1 / g, T.p) == 1;
}

long intrinsic_order_local(const TateData& T, long m) {
    require_tame(T, m);
    for (long nu = 1; nu <= m; ++nu)
        if (is_mth_power_local(T, rpow(T.q, nu), m)) return m / nu;
    fail("DomainError", "q^m is always an m-th power");
}

std::vector<std::pair<long, Rational>> m_torsion_representatives(const TateData& T, long m) {
    require_tame(T, m);
    if (T.p > 100000) fail("DomainError", "root search modulo p needs p <= 100000");
    long p = T.p.get_si();
    Integer M = modulus(T);
    std::vector<std::pair<long, Rational>> out;
    for (long c = 0; c < m; ++c) {
        if ((c * T.n) % m) continue;
        long e = c * T.n / m;
        Integer w = unit_mod(rpow(T.q, c), T.p, M);
        long wp = Integer(w % p).get_si();
        for (long x0 = 1; x0 < p; ++x0) {
            if (powmod(Integer(x0), Integer(m), Integer(p)) != wp) continue;
            // Newton iteration for x^m = w modulo p^k.
            Integer x = x0, pk = p;
            while (pk < M) {
                pk = pk * pk;
                if (pk > M) pk = M;
                Integer f = (powmod(x, Integer(m), pk) - w) % pk;
                Integer df = Integer(m) * powmod(x, Integer(m - 1), pk) % pk, inv;
                mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), pk.get_mpz_t());
                x = (x - f * inv) % pk;
                if (x < 0) x += pk;
            }
            out.emplace_back(c, rpow(Rational(T.p), e) * Rational(x));
            break;
        }
    }
    return out;
}

std::vector<long> s_m_image(const TateData& T, long m) {
    std::vector<long> out;
    for (const auto& [c, a] : m_torsion_representatives(T, m)) {
        (void)c;
        out.push_back(s_m_of(T, a, m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long> delta_kernel(const TateData& T, long m) {
    std::vector<long> out;
    for (long c = 0; c < m; ++c)
        if (is_mth_power_local(T, rpow(T.q, c), m)) out.push_back(c);
    return out;
}

std::string to_string(KodairaOutcome o) {
    switch (o) {
    case KodairaOutcome::Pass: return "Pass";
    case KodairaOutcome::Fail: return "Fail";
    case KodairaOutcome::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

// Orders of the intrinsic torsion points, computed on first use.
class IntrinsicOrders {
public:
    explicit IntrinsicOrders(const Curve& E) : E_(E) {}
    bool contains(long m) {
        if (!orders_) {
            orders_.emplace();
            TorsionGroup G = torsion_subgroup(E_);
            Gram gram = gram_matrix(E_, G);
            for (const auto& [i, j] : intrinsic_subgroup(gram, G)) orders_->push_back(E_.order(G.element(i, j)));
        }
        return std::find(orders_->begin(), orders_->end(), m) != orders_->end();
    }

private:
    const Curve& E_;
    std::optional<std::vector<long>> orders_;
};

KodairaReport kodaira_core(const ReductionData& red, const Integer& p, long m, IntrinsicOrders& intrinsic) {
    KodairaReport out;
    out.n = red.n;
    if (!red.multiplicative || !red.split) {
        out.reason = "not split multiplicative";
        return out;
    }
    if (std::gcd(m, Integer(p - 1).get_si()) != 1) {
        out.reason = "mu_m(Q_p) is nontrivial";
        return out;
    }
    if (!intrinsic.contains(m)) {
        out.reason = "no intrinsic point of order m";
        return out;
    }
    out.outcome = red.n % (m * m) == 0 ? KodairaOutcome::Pass : KodairaOutcome::Fail;
    out.reason = out.outcome == KodairaOutcome::Pass ? "m^2 divides n" : "m^2 does not divide n";
    return out;
}

} // namespace

KodairaReport kodaira_check(const Curve& E, const Integer& p, long m) {
    if (p < 5) fail("WildPrime", "p must be at least 5");
    if (m <= 0) fail("DomainError", "m must be positive");
    if (m % p.get_si() == 0 && p <= m) fail("WildCase", "p divides m");
    IntrinsicOrders intrinsic(E);
    return kodaira_core(multiplicative_reduction_data(E, p), p, m, intrinsic);
}

std::vector<KodairaEntry> kodaira_scan(const Curve& E, long p_max, long m_max) {
    std::vector<KodairaEntry> out;
    IntrinsicOrders intrinsic(E);
    for (unsigned long p : primes_up_to(static_cast<unsigned long>(std::max(p_max, 0L)))) {
        if (p < 5) continue;
        Integer P(p);
        ReductionData red = multiplicative_reduction_data(E, P);
        for (long m = 2; m <= m_max; ++m) {
            if (m % static_cast<long>(p) == 0) continue;
            out.push_back({static_cast<long>(p), m, kodaira_core(red, P, m, intrinsic)});
        }
    }
    return out;
}

} // namespace ecp
