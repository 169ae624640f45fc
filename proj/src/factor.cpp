#include "ecpair/factor.hpp"

#include "ecpair/errors.hpp"

#include <algorithm>
#include <vector>

namespace ecp {

namespace {

// Largest n for which the first 13 prime bases give a deterministic answer.
const Integer& mr_deterministic_limit() {
    static const Integer limit("3317044064679887385961981", 10);
    return limit;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, unsigned long base) {
    Integer a(base);
    if (a % n == 0) return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Integer nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

bool miller_rabin(const Integer& n) {
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (n < 2) return false;
    for (unsigned long b : bases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long b : bases)
        if (!miller_rabin_round(n, d, s, b)) return false;
    return true;
}

// Pollard-Brent with batched gcds. Returns a nontrivial divisor or 0.
Integer brent(const Integer& n, unsigned long c, unsigned long& budget) {
    const unsigned long batch = 128;
    Integer y = 2, x, ys, q = 1, g = 1, cc = c, tmp;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
        v = v * v + cc;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                step(y);
                tmp = abs(x - y);
                q = q * tmp % n;
            }
            if (budget <= lim) return 0;
            budget -= lim;
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            tmp = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

void split(const Integer& n, Factorization& out, unsigned long& budget) {
    if (n == 1) return;
    // Perfect powers defeat rho; peel them first.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                Factorization sub;
                split(root, sub, budget);
                for (auto& [p, e] : sub) out[p] += e * static_cast<long>(k);
                return;
            }
        }
    }
    if (is_certified_prime(n)) {
        out[n] += 1;
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Integer d = brent(n, c, budget);
        if (d != 0) {
            split(d, out, budget);
            split(n / d, out, budget);
            return;
        }
        if (budget == 0) fail("FactorTooHard", "rho budget exhausted on " + n.get_str());
    }
}

} // namespace

std::span<const unsigned long> primes_up_to(unsigned long bound) {
    constexpr unsigned long kLimit = 1UL << 20;
    if (bound > kLimit) fail("DomainError", "prime table limited to " + std::to_string(kLimit));
    static const std::vector<unsigned long> table = [] {
        std::vector<bool> composite(kLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    auto end = std::upper_bound(table.begin(), table.end(), bound);
    return {table.data(), static_cast<size_t>(end - table.begin())};
}

bool is_certified_prime(const Integer& n) {
    if (n < 2) return false;
    bool probable = miller_rabin(n);
    if (!probable) return false;
    if (n < mr_deterministic_limit()) return true;
    fail("FactorTooHard", "probable prime beyond certification range: " + n.get_str());
}

Factorization factor_integer(const Integer& value, const FactorOptions& opts) {
    if (value == 0) fail("DomainError", "factorization of zero");
    Factorization out;
    Integer n = abs(value);
    const auto primes = primes_up_to(opts.trial_bound);
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        unsigned long m = n.get_ui();
        for (unsigned long p : primes) {
            if (p > opts.trial_bound) break;
            if (p * p > m) break;
            if (m % p == 0) {
                long e = 0;
                while (m % p == 0) { m /= p; ++e; }
                out[Integer(p)] = e;
            }
        }
        n = m;
        if (n == 1) return out;
        unsigned long last = std::min<unsigned long>(opts.trial_bound, primes.empty() ? 1 : primes.back());
        if (n.get_ui() <= last * last) {
            out[n] += 1;
            return out;
        }
    } else {
        for (unsigned long p : primes) {
            if (p > opts.trial_bound) break;
            if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                long e = 0;
                while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                    ++e;
                }
                out[Integer(p)] = e;
                if (n == 1) return out;
            }
        }
    }
    unsigned long budget = opts.rho_budget;
    split(n, out, budget);
    return out;
}

} // namespace ecp
