#pragma once

#include <stdexcept>
#include <string>

namespace cycdec {

// Invalid torus dimensions (either side below 3).
struct InvalidDims : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The two vertices handed to canonical_edge are not adjacent on the torus.
struct NotAnEdge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructor was called outside its stated precondition
// (e.g. three-cycle decomposition with neither side divisible by 3).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested decomposition is known not to exist (proved impossible,
// not merely out of scope).
struct KnownImpossibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k cannot be split into factors g*h with g | gcd(m,n), h | 4*lcm(m,n).
struct InfeasibleSplit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two blocks assign different colors to a shared boundary edge.  Indicates
// a transcription bug in the block tables, never a user error.
struct ColorConflict : std::logic_error {
    using std::logic_error::logic_error;
};

// A rewrite step (cycle combination, cycle tracing) found the decomposition
// in a shape that violates the operation's precondition.  The message names
// the offending edge.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cycdec
