#include "ecpair/universal_check.hpp"

#include "ecpair/census.hpp"
#include "ecpair/errors.hpp"
#include "ecpair/pairing.hpp"

#include <algorithm>
#include <random>

namespace ecp {

std::vector<FamilyId> sample_parameters(const std::string& family, long samples, long H, std::uint64_t seed) {
    auto params = census_parameters(family, H);
    std::mt19937_64 rng(seed);
    std::shuffle(params.begin(), params.end(), rng);
    if (samples >= 0 && static_cast<size_t>(samples) < params.size()) params.resize(samples);
    return params;
}

UniversalReport verify_universal(const std::string& family, long samples, long H, std::uint64_t seed) {
    UniversalReport rep;
    rep.family = family;
    for (const auto& id : sample_parameters(family, samples, H, seed)) {
        FamilyCurve fc = build_curve(id);
        Prediction pred = predicted_pairings(id);
        bool ok = true;
        try {
            ok = pairing_points(fc.curve, fc.P, fc.P) == pred.PP;
            if (fc.Q) {
                ok = ok && pairing_points(fc.curve, *fc.Q, *fc.Q) == *pred.QQ;
                ok = ok && pairing_points(fc.curve, fc.P, *fc.Q) == *pred.PQ;
            }
        } catch (const MathError& e) {
            if (e.kind() != "FactorTooHard") throw;
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (!ok) rep.failures.push_back(id.str());
    }
    return rep;
}

} // namespace ecp
