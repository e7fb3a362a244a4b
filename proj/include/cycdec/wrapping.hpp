#pragma once

#include "cycdec/decomposition.hpp"

// Wrapping numbers of a cycle on the torus: lift the walk to the infinite
// grid; v (resp. h) counts how often it wraps vertically (horizontally).
// Every k-cycle satisfies  k = n*h + m*v + 2*(l_v + l_h)  with l_v, l_h
// nonnegative integers (the non-wrapping back-and-forth surplus).

namespace cycdec {

struct WrappingNumbers {
    int v = 0;
    int h = 0;
    int l_v = 0;
    int l_h = 0;

    int l() const { return l_v + l_h; }

    friend bool operator==(const WrappingNumbers&, const WrappingNumbers&) = default;
};

// Measures a valid cycle.  Divisibility of the lifted displacement by m/n
// and integrality of l_v/l_h are guaranteed by cycle closure; violations
// are asserted (they would indicate a core bug, not bad input).
WrappingNumbers wrapping_numbers(const CycleWalk& c);

// True iff nonnegative v,h,l exist with k = n*h + m*v + 2*l, requiring
// k >= 4 in the non-wrapping case v = h = 0.  A necessary condition for a
// k-cycle to exist, used as a search prefilter.
bool wrapping_feasible(long long k, int m, int n);

} // namespace cycdec
