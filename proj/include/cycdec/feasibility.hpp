#pragma once

#include <optional>
#include <string>

#include "cycdec/decomposition.hpp"

namespace cycdec {

enum class Method {
    ThreeCycles,  // k = 2mn/3 with 3 | mn
    FourPhase,    // m,n,k all divisible by 4 and (k/4) | 4(m/4)(n/4)
    Checkerboard, // k = 4, both sides even
    C6,           // k = 6 on (3,3), (6,6), {6,4N}
    Odd,          // k = max(m,n), both odd, max < 2*min
};

const char* method_name(Method m);

enum class Reason {
    DivisibilityFail,   // k > mn or k does not divide 2mn
    WrappingFail,       // no nonnegative (v,h,l) solves k = nh+mv+2l
    OddTooSmall,        // k odd with m,n > k: no C_k subgraph at all
    C6Characterization, // k = 6 outside the three feasible families
    CheckerboardParity, // k = 4 with an odd side
};

const char* reason_name(Reason r);

struct FeasibilityVerdict {
    enum class Kind {
        ConstructibleHere,      // a constructor in this library produces it
        KnownImpossible,        // proved impossible
        NecessaryConditionsFail,// violates a necessary counting condition
        OpenUnknown,            // outside every known result
    };

    Kind kind = Kind::OpenUnknown;
    std::optional<Method> method; // set for ConstructibleHere
    std::optional<Reason> reason; // set for the two negative kinds
    std::string detail;           // one-line human explanation

    std::string to_string() const;
};

// Decides C_k | C_m x C_n as far as the implemented results reach.
// Checks run cheapest-first; the verdict carries the first applicable
// reason.  ConstructibleHere verdicts are backed by run_method.
FeasibilityVerdict feasibility(long long k, TorusDims dims);

// Runs the named constructor for (dims, k), handling orientation
// (transposes for the odd and C6 constructions, parameter mapping for the
// 4k family).  Propagates the constructor's errors.
Decomposition run_method(Method method, TorusDims dims, long long k);

} // namespace cycdec
