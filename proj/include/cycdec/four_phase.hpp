#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cycdec/decomposition.hpp"

// C_{4k}-decompositions of C_{4m} x C_{4n} for every k | 4mn, built by
// merging the checkerboard four-cycles with a cycle combination operation
// in two phases (first along the diagonal strands, then across them).

namespace cycdec {

// Checkerboard C4 decomposition {C4(y,z) : y+z even} of C_m x C_n.
// Exists iff m and n are both even; throws KnownImpossibleError otherwise
// (an odd side leaves no C4 decomposition at all).
Decomposition checkerboard(TorusDims dims);

enum class Family : std::uint8_t { R = 0, B = 1, S = 2, T = 3 };

char family_letter(Family f);

// One labeled four-cycle on C_{4m} x C_{4n}.  R and B enumerate the
// checkerboard squares; S and T the complementary (recolorable) squares.
// Index conventions: i mod 4*lcm(m,n), j mod gcd(m,n).
struct LabeledFour {
    Family family = Family::R;
    int i = 0;
    int j = 0;
    std::array<Vertex, 4> verts; // cyclic order
};

// The single square (family,i,j), from the base squares and recurrences
//   R^{0,0}={(0,0),(0,1),(1,1),(1,0)}   R^{1,0}={(0,2),(0,3),(1,3),(1,2)}
//   B^{0,0}={(4m-1,1),(4m-1,2),(0,2),(0,1)}  B^{1,0}={(1,1),(1,2),(2,2),(2,1)}
//   X^{i,0} = X^{i-2,0}+(2,2),  X^{i,j} = X^{i,0}+(4j,0)
//   S^{0,0}={(0,1),(0,2),(1,2),(1,1)},  S^{i,0} = S^{i-1,0}+(1,1)
//   T^{i,j} = S^{i,j}+(1,-1)
LabeledFour labeled_four(Family f, int i, int j, int m, int n);

// Every R, B, S and T label: i in [0, 4*lcm(m,n)), j in [0, gcd(m,n)).
// The R and B families together hit each checkerboard square exactly once
// (asserted), likewise S and T for the complementary squares.
std::vector<LabeledFour> label_checkerboard(int m, int n);

// Cycle combination: the four vertices (v,w,w',v') must form a unit
// square whose edges lie in four pairwise distinct classes.  Recolors so
// the classes of vw,v'w' merge into one cycle and the classes of vv',ww'
// merge into another; class count drops by exactly 2.  Merged classes
// lose their labels (callers relabel).  Throws StructuralError naming the
// offending edge when the square does not meet the precondition.
Decomposition combine(const Decomposition& d, const std::array<Vertex, 4>& square);

struct FactorSplit {
    int g = 1; // divides gcd(m,n)
    int h = 1; // divides 4*lcm(m,n); g*h = k, g <= h

    friend bool operator==(const FactorSplit&, const FactorSplit&) = default;
};

// All valid splits of k, ordered by g ascending.
std::vector<FactorSplit> factor_splits(int k, int m, int n);

// The split with smallest g (largest h); (1,1) when k = 1.
// Throws InfeasibleSplit when k does not divide 4mn or no split exists.
FactorSplit factor_split(int k, int m, int n);

// C_{4k}-decomposition of C_{4m} x C_{4n}: 8mn/k classes of length 4k,
// labels "R_<4k>^{a,b}" / "B_<4k>^{a,b}" recording the lineage indices.
// Phase 1 combines at S^{i,j} for h not dividing i+1; Phase 2 at T^{i,j}
// for h | i and g not dividing j+1 (strictly after all of Phase 1).
Decomposition decompose_4k(int m, int n, int k,
                           std::optional<FactorSplit> split = std::nullopt);

} // namespace cycdec
