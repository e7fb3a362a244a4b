#pragma once

#include <array>
#include <map>
#include <string>

#include "cycdec/decomposition.hpp"

// Decomposition of C_m x C_n into three cycles of equal length 2mn/3,
// available whenever 3 divides m or n.  Built from translatable
// color-labeled blocks; seven constructions cover all (m,n) shapes.

namespace cycdec {

enum class Color : std::uint8_t { Red = 0, Yellow = 1, Blue = 2 };

const char* color_name(Color c); // "red" / "yellow" / "blue"

// Vertex offset within a block; may step one unit outside the block's
// rows x cols box (-1 or rows/cols) for boundary edges shared with the
// neighboring block.
struct OffsetVertex {
    int r = 0;
    int c = 0;
};

struct OffsetEdge {
    OffsetVertex a;
    OffsetVertex b;
};

struct Block {
    std::string name; // "Case1.A" ... "Case7.D"
    int rows = 0;
    int cols = 0;
    std::array<std::vector<OffsetEdge>, 3> edges; // indexed by Color
};

struct BlockInstance {
    const Block* block = nullptr;
    int row_shift = 0;
    int col_shift = 0;
};

enum class CaseNumber : int {
    Case1 = 1, // m odd
    Case2,     // m = 4, n even
    Case3,     // m = 4, n = 3
    Case4,     // m = 4, n >= 9 odd
    Case5,     // m >= 6 even, n = 6
    Case6,     // m >= 6 even, n >= 12 even
    Case7,     // m >= 6 even, n odd
};

struct CaseId {
    CaseNumber number = CaseNumber::Case1;
    bool swapped = false; // construction ran on (n,m) and was transposed back
};

// All fixed blocks, keyed "CaseK.X".  The parametric Case6.C entry is the
// n=12 instance; assembly regenerates it at the right width.
const std::map<std::string, Block>& block_catalog();

// The 2 x n boundary-row block of Case 6, generated for any n = 6+6N, N>=1.
Block case6_c_block(int n);

// Picks the construction for oriented dims (3 | n required).
CaseId select_case(TorusDims oriented);

// Runs one construction directly; the case's guard must hold for dims.
// Shared boundary edges listed by two blocks are checked for color
// agreement (ColorConflict on mismatch) and deduplicated.
Decomposition assemble_case(CaseNumber which, TorusDims dims);

// Three cycles of length 2mn/3 labeled "red", "yellow", "blue".
// If 3 | n the construction runs on (m,n) directly (also when both sides
// divide); otherwise it runs on (n,m) and transposes the result.
// Throws PreconditionError when neither side is divisible by 3.
Decomposition decompose_three_cycles(TorusDims dims);

} // namespace cycdec
