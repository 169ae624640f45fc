#pragma once

#include "ecpair/curve.hpp"
#include "ecpair/tensor.hpp"

#include <string>
#include <vector>

namespace ecp {

// Tate curve G_m / q^Z over Q_p. Unit arithmetic is done modulo p^k.
struct TateData {
    Integer p;
    Rational q;
    long n = 0; // v_p(q) > 0
    long k = 20;

    // Throws DomainError unless p is prime and v_p(q) > 0.
    static TateData make(const Integer& p, const Rational& q, long k = 20);
};

// s_m([a]) in Z/m: a^m = q^s with s = v(a) m / n, the unit part of
// a^m q^(-s) checked to be 1 modulo p^k. Throws NotTorsion, or WildCase if p | m.
long s_m_of(const TateData& T, const Rational& a, long m);

// v (x) id of <[a], [b]> from the s-values: -s s' n / m^2 mod 1.
QmodZ tate_pairing_valuation(long m, long s, long s2, long n);

// a^(-s_m([b])) (x) 1/m as a global class.
TensorClass tate_pairing_rational(const TateData& T, const Rational& a, const Rational& b, long m);

// The three valuation components v(a^(-s')) / m, v(b^(-s)) / m and
// -s s' n / m^2.
struct ThreeWay {
    QmodZ from_a, from_b, from_q;
    bool consistent() const { return from_a == from_b && from_b == from_q; }
};
ThreeWay tate_pairing_three_way(const TateData& T, const Rational& a, const Rational& b, long m);

// z in (Q_p^x)^m for p not dividing m.
bool is_mth_power_local(const TateData& T, const Rational& z, long m);

// m / min{nu > 0 : q^nu in (Q_p^x)^m}.
long intrinsic_order_local(const TateData& T, long m);

// Representatives a (as rationals accurate modulo p^k) of classes [a] in
// E_q(Q_p)[m] with a^m = q^c, one per c in [0, m) for which an m-th root
// exists. Roots are found modulo p and Hensel lifted.
std::vector<std::pair<long, Rational>> m_torsion_representatives(const TateData& T, long m);

// {s_m([a])} over the representatives above.
std::vector<long> s_m_image(const TateData& T, long m);
// {c in [0, m) : q^c is an m-th power}, the kernel of delta_m.
std::vector<long> delta_kernel(const TateData& T, long m);

enum class KodairaOutcome { Pass, Fail, NotApplicable };
std::string to_string(KodairaOutcome o);

struct KodairaReport {
    KodairaOutcome outcome = KodairaOutcome::NotApplicable;
    long n = 0;
    std::string reason;
};

// For p >= 5 with p not dividing m: if E is split multiplicative of type I_n
// at p, gcd(m, p - 1) = 1 and E has an intrinsic point of order m, then
// Pass iff m^2 | n. Throws WildPrime for p < 5 and WildCase for p | m.
KodairaReport kodaira_check(const Curve& E, const Integer& p, long m);

struct KodairaEntry {
    long p = 0, m = 0;
    KodairaReport report;
};
// kodaira_check at every prime 5 <= p <= p_max and 2 <= m <= m_max with p not
// dividing m; the reduction is computed once per prime and the intrinsic
// subgroup at most once.
std::vector<KodairaEntry> kodaira_scan(const Curve& E, long p_max, long m_max);

} // namespace ecp
