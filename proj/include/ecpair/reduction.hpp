#pragma once

#include "ecpair/curve.hpp"

namespace ecp {

struct ReductionData {
    bool multiplicative = false;
    bool split = false;
    long n = 0; // -v_p(j) when multiplicative
};

// Reduction type at the prime p. For p >= 5 the model is first rescaled to be
// p-minimal using c4 and c6. For p in {2, 3} a minimal model is searched for
// by stepwise integral changes of variables; AmbiguousModel is raised when
// the required search exceeds 2^20 candidates.
ReductionData multiplicative_reduction_data(const Curve& E, const Integer& p);

} // namespace ecp
