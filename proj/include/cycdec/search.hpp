#pragma once

#include <optional>
#include <vector>

#include "cycdec/decomposition.hpp"

// Exhaustive exact-cover search for C_k-decompositions at desk scale:
// columns are the 2mn edges, rows are candidate k-cycles.  Strictly
// deterministic: no randomization, candidates in canonical order,
// branching on the uncovered edge with fewest remaining candidates.

namespace cycdec {

struct SearchConfig {
    long long node_limit = 10'000'000; // backtracking nodes before giving up
    bool use_wrapping_filter = true;   // prune lengths failing the wrapping equation
};

struct SearchOutcome {
    enum class Kind { Found, ProvedImpossible, Inconclusive };

    Kind kind = Kind::Inconclusive;
    std::optional<Decomposition> decomposition; // set for Found
    long long nodes = 0;                        // backtracking nodes expended
};

// All simple cycles of length exactly k, each listed once (deduplicated up
// to rotation and reflection), ordered canonically: ascending start vertex,
// then lexicographic vertex sequence.  With the wrapping filter on, a k
// failing wrapping_feasible yields an empty list without enumeration.
std::vector<CycleWalk> enumerate_cycles(TorusDims dims, int k,
                                        bool use_wrapping_filter = true);

// Found(decomposition) on success (first solution in canonical branch
// order; validity asserted), ProvedImpossible when the tree is exhausted,
// Inconclusive(nodes) when the node budget runs out.  k > mn or k not
// dividing 2mn is ProvedImpossible immediately by counting.
SearchOutcome search(TorusDims dims, int k, const SearchConfig& cfg = {});

} // namespace cycdec
