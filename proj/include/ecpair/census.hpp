#pragma once

#include "ecpair/classifier.hpp"
#include "ecpair/families.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ecp {

struct CensusRow {
    RowKey key;
    std::set<Rational> js; // distinct j-invariants seen
    long first_index = -1; // sweep position of the witness
    std::string witness_id;
    std::optional<Curve> witness;
    long count() const { return static_cast<long>(js.size()); }
};

struct Census {
    std::string family;
    long H = 0;
    long examined = 0;
    long skipped = 0; // FactorTooHard
    std::map<RowKey, CensusRow> rows;

    // Merge another census of the same sweep (counts by j, earliest witness).
    void merge(const Census& o);
};

// "E2", "E3", "E4".."E12", "E2x2", "E4x2", "E6x2", "E8x2".
const std::vector<std::string>& census_families();

struct SweepOptions {
    long a_bound = 7; // |a| bound for the scale grids of E2 and E2x2
    int jobs = 1;
};

// Non-degenerate parameters of the family with |num|, den <= H in Farey
// order; the order-2 and order-3 forms add the scale grid (squarefree a for
// order 2, cube-free a with |a| <= H for E3 at t = -1).
std::vector<FamilyId> census_parameters(const std::string& family, long H, const SweepOptions& opts = {});

Census family_search(const std::string& family, long H, const SweepOptions& opts = {});

struct TableLine {
    RowKey key;
    bool admissible = false;
    long count = 0;
    std::string witness_id;
};

struct TableReport {
    std::vector<TableLine> lines;
    std::vector<RowKey> missing;
    std::vector<RowKey> inadmissible;
    bool ok() const { return missing.empty() && inadmissible.empty(); }
};

// Every admissible row (the trivial group only when include_trivial) needs a
// witness and no inadmissible row may occur.
TableReport table_check(const std::vector<Census>& censuses, bool include_trivial = false);
// Throws InadmissibleRow or MissingRow.
void enforce(const TableReport& report);

} // namespace ecp
