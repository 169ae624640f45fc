#pragma once

#include "ecpair/families.hpp"
#include "ecpair/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ecp {

// Named modular functions expanded at the cusp at infinity:
//   t<N>    hauptmodul of X_1(N), N in {2..10, 12}
//   u<N>    hauptmodul of X_1^0(N,2), N in {2, 4, 6, 8}
//   f<N>    (E_{0,1} E_{0,3} / E_{0,2}^2)^N
//   s<N>/<M> (E_{0,1} E_{0,3} / E_{0,2}^2)^(N/M), M | N
//   a<N>, b<N> Tate normal form coefficients
// Throws UnsupportedCombination for anything else.
QSeries hauptmodul_series(const std::string& which, long K);

struct IdentityResult {
    std::string id;
    bool pass = false;
    long precision = 0;
    std::optional<Rational> mismatch; // first differing exponent
    std::string error;                // set when the check itself raised
};

// Identities (checked to K terms past the leading exponent):
//   f<N>     f(tau) = printed rational function of t
//   tu<N>    t = t(u) for N in {2, 4, 6, 8}
//   a<N>, b<N>  Tate coefficients as functions of t
//   s<N>/<M> s^M c(t)^N = f_N(t), c = 1 except N = 8, 12 (1 + t) and
//            N = 10 ((1 + t)(1 + t - t^2))
IdentityResult verify_identity(const std::string& id, long K = 200);
std::vector<std::string> identity_names();
std::vector<IdentityResult> verify_identities(const std::vector<std::string>& ids, long K, int jobs);

// The correction factor c(t) for s-identities.
const RatFunc& s_correction(int N);

} // namespace ecp
