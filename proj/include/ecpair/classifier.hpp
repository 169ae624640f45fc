#pragma once

#include "ecpair/curve.hpp"
#include "ecpair/families.hpp"
#include "ecpair/pairing.hpp"
#include "ecpair/torsion.hpp"

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ecp {

// (A, |B|, orbit). orbit is "2P" or "Q" for A = Z/4 x Z/2 with |B| = 2 and
// empty otherwise.
struct RowKey {
    long d1 = 1, d2 = 1;
    long b = 1;
    std::string orbit;

    std::string A_label() const; // "0", "5", "4x2", ...
    std::string str() const;     // "4x2|2|2P"
    auto tie() const { return std::tie(d1, d2, b, orbit); }
    bool operator<(const RowKey& o) const { return tie() < o.tie(); }
    bool operator==(const RowKey& o) const { return tie() == o.tie(); }
};

struct Classification {
    RowKey row;
    TorsionGroup group;
    Gram gram;
    std::vector<std::pair<long, long>> intrinsic; // coordinates of B
};

// Rows of the intrinsic torsion table, including the trivial group and both
// orbit labels for Z/4 x Z/2.
const std::vector<RowKey>& admissible_rows();
bool is_admissible(const RowKey& row);

// Torsion, Gram matrix and intrinsic subgroup of E. Throws InadmissibleRow
// when check is set and the row is not in the table.
Classification classify(const Curve& E, bool check = true);

// <P, (N/M)P> = 0 via f_N(t(E, P)) = +-s^M. Throws OrderOutOfRange unless the
// order of P is in {4..10, 12}, DomainError unless M | N.
bool membership_cyclic(const Curve& E, const Point& P, long M);

// g_N^(nu)(u(E, P, Q)) = +-s^(M_nu) for nu = 1, 2, 3.
bool membership_bicyclic(const Curve& E, const Point& P, const Point& Q, std::array<long, 3> M);

} // namespace ecp
