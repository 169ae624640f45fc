#pragma once

#include "ecpair/families.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ecp {

struct UniversalReport {
    std::string family;
    long checked = 0;
    long skipped = 0; // FactorTooHard
    std::vector<std::string> failures; // family ids whose pairings disagree
    bool pass() const { return failures.empty(); }
};

// Pairings from the Miller-function oracle against the closed forms, on
// `samples` parameters drawn without replacement (seeded) from the family
// sweep of height H.
UniversalReport verify_universal(const std::string& family, long samples, long H, std::uint64_t seed = 1);

// Pseudo-random sample of the sweep parameters, deterministic in the seed.
std::vector<FamilyId> sample_parameters(const std::string& family, long samples, long H, std::uint64_t seed);

} // namespace ecp
