#pragma once

#include "ecpair/rational.hpp"

#include <map>
#include <span>

namespace ecp {

struct FactorOptions {
    unsigned long trial_bound = 10000;
    // Total Pollard-Brent iterations allowed per call before FactorTooHard.
    unsigned long rho_budget = 1UL << 22;
};

// prime -> exponent, primes ascending.
using Factorization = std::map<Integer, long>;

// Factorization of |n|, n != 0. Throws MathError("FactorTooHard") when the
// iteration budget is exhausted or a factor is beyond certified primality.
Factorization factor_integer(const Integer& n, const FactorOptions& opts = {});

// Deterministic Miller-Rabin, valid below 3.317e24. Throws FactorTooHard above
// that bound unless n is composite.
bool is_certified_prime(const Integer& n);

// Primes <= bound, ascending.
std::span<const unsigned long> primes_up_to(unsigned long bound); // bound <= 2^20

} // namespace ecp
