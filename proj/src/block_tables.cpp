#include "cycdec/three_cycles.hpp"

// Static color-block tables for the three-cycle constructions.
//
// Each block covers a rows x cols box of vertices and lists, per color, every
// edge incident to that box, as offsets relative to the box's upper-left
// vertex.  Offsets may step one unit outside the box (-1, or rows/cols):
// those are boundary edges shared with a neighboring block.  A shared edge is
// usually listed by both neighbors (they must then agree on its color, which
// assembly checks) but single listing is also fine; assembly deduplicates.

namespace cycdec {

const char* color_name(Color c) {
    switch (c) {
    case Color::Red: return "red";
    case Color::Yellow: return "yellow";
    case Color::Blue: return "blue";
    }
    return "?";
}

namespace {

// {row_a, col_a, row_b, col_b}
using E = std::array<int, 4>;

std::vector<OffsetEdge> edges_from(std::initializer_list<E> list) {
    std::vector<OffsetEdge> out;
    out.reserve(list.size());
    for (const E& e : list) {
        out.push_back(OffsetEdge{{e[0], e[1]}, {e[2], e[3]}});
    }
    return out;
}

Block make_block(std::string name, int rows, int cols,
                 std::initializer_list<E> red, std::initializer_list<E> yellow,
                 std::initializer_list<E> blue) {
    Block b;
    b.name = std::move(name);
    b.rows = rows;
    b.cols = cols;
    b.edges[0] = edges_from(red);
    b.edges[1] = edges_from(yellow);
    b.edges[2] = edges_from(blue);
    return b;
}

std::map<std::string, Block> build_catalog() {
    std::map<std::string, Block> cat;
    auto add = [&cat](Block b) { cat.emplace(b.name, std::move(b)); };

    // ----- construction 1 (m odd, any n = 3N): a 3x3 block repeated along
    // the top three rows plus 2x3 blocks tiling the remaining row pairs.
    add(make_block(
        "Case1.A", 3, 3,
        {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 2},
         {1, 2, 2, 2}, {2, 2, 2, 3}, {2, -1, 2, 0}, {2, 0, 3, 0}},
        {{0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 2, 1},
         {2, 1, 2, 2}, {2, 2, 3, 2}, {-1, 2, 0, 2}, {0, 2, 0, 3}},
        {{-1, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2}, {1, 2, 1, 3},
         {1, -1, 1, 0}, {1, 0, 2, 0}, {2, 0, 2, 1}, {2, 1, 3, 1}}));
    add(make_block(
        "Case1.B", 2, 3,
        {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 0},
         {1, 0, 2, 0}},
        {{-1, 2, 0, 2}, {0, 2, 0, 3}, {0, -1, 0, 0}, {0, 0, 1, 0},
         {1, 0, 1, -1}, {1, 3, 1, 2}, {1, 2, 2, 2}},
        {{-1, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2}, {1, 2, 1, 1},
         {1, 1, 2, 1}}));

    // ----- construction 2 (m = 4, n even = 6+6N): one 4x6 seed block plus
    // N repeating 4x6 blocks to its right.
    add(make_block(
        "Case2.A", 4, 6,
        {{1, -1, 1, 0}, {1, 0, 2, 0}, {2, 0, 2, 1}, {2, 1, 1, 1},
         {1, 1, 1, 2}, {1, 2, 2, 2}, {2, 2, 3, 2}, {3, 2, 4, 2},
         {-1, 2, 0, 2}, {0, 2, 0, 3}, {0, 3, 1, 3}, {1, 3, 2, 3},
         {2, 3, 2, 4}, {2, 4, 3, 4}, {3, 4, 4, 4}, {-1, 4, 0, 4},
         {0, 4, 0, 5}, {0, 5, 1, 5}, {1, 5, 1, 6}},
        {{-1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1},
         {0, 1, -1, 1}, {4, 1, 3, 1}, {3, 1, 2, 1}, {2, 1, 2, 2},
         {2, 2, 2, 3}, {2, 3, 3, 3}, {3, 3, 4, 3}, {-1, 3, 0, 3},
         {0, 3, 0, 4}, {0, 4, 1, 4}, {1, 4, 2, 4}, {2, 4, 2, 5},
         {2, 5, 3, 5}, {3, 5, 3, 6}, {3, -1, 3, 0}, {3, 0, 4, 0}},
        {{0, -1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2},
         {1, 2, 1, 3}, {1, 3, 1, 4}, {1, 4, 1, 5}, {1, 5, 2, 5},
         {2, 5, 2, 6}, {2, -1, 2, 0}, {2, 0, 3, 0}, {3, 0, 3, 1},
         {3, 1, 3, 2}, {3, 2, 3, 3}, {3, 3, 3, 4}, {3, 4, 3, 5},
         {3, 5, 4, 5}, {-1, 5, 0, 5}, {0, 5, 0, 6}}));
    add(make_block(
        "Case2.B", 4, 6,
        {{4, 0, 3, 0}, {3, 0, 3, 1}, {3, 1, 3, 2}, {3, 2, 2, 2},
         {2, 2, 1, 2}, {1, 2, 1, 3}, {1, 3, 0, 3}, {0, 3, 0, 4},
         {0, 4, 1, 4}, {1, 4, 2, 4}, {2, 4, 3, 4}, {3, 4, 3, 5},
         {3, 5, 2, 5}, {2, 5, 1, 5}, {1, 5, 1, 6}, {-1, 0, 0, 0},
         {0, 0, 1, 0}, {1, 0, 1, -1}},
        {{-1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 2}, {1, 2, 0, 2},
         {0, 2, -1, 2}, {4, 2, 3, 2}, {3, 2, 3, 3}, {3, 3, 2, 3},
         {2, 3, 1, 3}, {1, 3, 1, 4}, {1, 4, 1, 5}, {1, 5, 0, 5},
         {0, 5, -1, 5}, {4, 5, 3, 5}, {3, 5, 3, 6}, {3, -1, 3, 0},
         {3, 0, 2, 0}, {2, 0, 2, 1}, {2, 1, 3, 1}, {3, 1, 4, 1}},
        {{0, -1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 2}, {0, 2, 0, 3},
         {0, 3, -1, 3}, {4, 3, 3, 3}, {3, 3, 3, 4}, {3, 4, 4, 4},
         {-1, 4, 0, 4}, {0, 4, 0, 5}, {0, 5, 0, 6}, {2, -1, 2, 0},
         {2, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 2, 1}, {2, 1, 2, 2},
         {2, 2, 2, 3}, {2, 3, 2, 4}, {2, 4, 2, 5}, {2, 5, 2, 6}}));

    // ----- construction 3 (exactly 4x3): a single block covering the torus.
    add(make_block(
        "Case3.A", 4, 3,
        {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 0},
         {1, 0, 2, 0}, {2, 0, 2, 1}, {2, 1, 3, 1}, {3, 1, 3, 0},
         {3, 0, 4, 0}},
        {{0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, -1}, {1, 3, 1, 2},
         {1, 2, 2, 2}, {2, 2, 2, 3}, {2, -1, 2, 0}, {2, 0, 3, 0},
         {3, 0, 3, -1}, {3, 3, 3, 2}, {3, 2, 4, 2}, {-1, 2, 0, 2},
         {0, 2, 0, 3}},
        {{-1, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2}, {1, 2, 1, 1},
         {1, 1, 2, 1}, {2, 1, 2, 2}, {2, 2, 3, 2}, {3, 2, 3, 1},
         {3, 1, 4, 1}}));

    // ----- construction 4 (m = 4, n odd = 9+6N): three 4x3 anchor blocks
    // with runs of 4x2 connector blocks spliced between them.
    add(make_block(
        "Case4.A1", 4, 3,
        {{-1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1},
         {0, 1, 0, 2}, {0, 2, -1, 2}, {2, -1, 2, 0}, {2, 0, 2, 1},
         {2, 1, 2, 2}, {2, 2, 1, 2}, {1, 2, 1, 3}, {4, 2, 3, 2},
         {3, 2, 3, 3}, {3, -1, 3, 0}, {3, 0, 4, 0}},
        {{0, -1, 0, 0}, {0, 0, 0, 1}, {0, 1, -1, 1}, {4, 1, 3, 1},
         {3, 1, 3, 0}, {3, 0, 2, 0}, {2, 0, 1, 0}, {1, 0, 1, -1}},
        {{0, 3, 0, 2}, {0, 2, 1, 2}, {1, 2, 1, 1}, {1, 1, 2, 1},
         {2, 1, 3, 1}, {3, 1, 3, 2}, {3, 2, 2, 2}, {2, 2, 2, 3}}));
    add(make_block(
        "Case4.A2", 4, 3,
        {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 2, 1},
         {2, 1, 2, 0}, {2, 0, 1, 0}, {1, 0, 1, -1}, {4, 0, 3, 0},
         {3, 0, 3, -1}},
        {{-1, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, -1, 2}, {4, 2, 3, 2},
         {3, 2, 3, 3}, {4, 1, 3, 1}, {3, 1, 2, 1}, {2, 1, 2, 2},
         {2, 2, 1, 2}, {1, 2, 1, 3}},
        {{0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 2},
         {1, 2, 0, 2}, {0, 2, 0, 3}, {2, -1, 2, 0}, {2, 0, 3, 0},
         {3, 0, 3, 1}, {3, 1, 3, 2}, {3, 2, 2, 2}, {2, 2, 2, 3}}));
    add(make_block(
        "Case4.A3", 4, 3,
        {{-1, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2}, {1, 2, 2, 2},
         {2, 2, 2, 3}, {4, 1, 3, 1}, {3, 1, 3, 2}, {3, 2, 3, 3}},
        {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 2},
         {1, 2, 1, 3}, {-1, 2, 0, 2}, {0, 2, 0, 3}, {1, -1, 1, 0},
         {1, 0, 2, 0}, {2, 0, 2, 1}, {2, 1, 2, 2}, {2, 2, 3, 2},
         {3, 2, 4, 2}, {3, -1, 3, 0}, {3, 0, 4, 0}},
        {{0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 2, 1},
         {2, 1, 3, 1}, {3, 1, 3, 0}, {3, 0, 2, 0}, {2, 0, 2, -1}}));
    add(make_block(
        "Case4.B1", 4, 2,
        {{2, -1, 2, 0}, {2, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1},
         {0, 1, 1, 1}, {1, 1, 2, 1}, {2, 1, 2, 2}, {3, -1, 3, 0},
         {3, 0, 3, 1}, {3, 1, 3, 2}},
        {{0, -1, 0, 0}, {0, 0, -1, 0}, {4, 0, 3, 0}, {3, 0, 2, 0},
         {2, 0, 2, 1}, {2, 1, 3, 1}, {3, 1, 4, 1}, {-1, 1, 0, 1},
         {0, 1, 0, 2}, {1, -1, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 2}},
        {}));
    add(make_block(
        "Case4.B2", 4, 2,
        {{1, -1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1},
         {1, 1, 1, 2}, {3, -1, 3, 0}, {3, 0, 2, 0}, {2, 0, 2, 1},
         {2, 1, 3, 1}, {3, 1, 3, 2}},
        {},
        {{2, -1, 2, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 2, 1},
         {2, 1, 2, 2}, {0, -1, 0, 0}, {0, 0, -1, 0}, {-1, 1, 0, 1},
         {0, 1, 0, 2}, {4, 0, 3, 0}, {3, 0, 3, 1}, {3, 1, 4, 1}}));
    add(make_block(
        "Case4.B3", 4, 2,
        {},
        {{1, -1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1},
         {1, 1, 1, 2}, {3, -1, 3, 0}, {3, 0, 2, 0}, {2, 0, 2, 1},
         {2, 1, 3, 1}, {3, 1, 3, 2}},
        {{2, -1, 2, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 2, 1},
         {2, 1, 2, 2}, {0, -1, 0, 0}, {0, 0, -1, 0}, {-1, 1, 0, 1},
         {0, 1, 0, 2}, {4, 0, 3, 0}, {3, 0, 3, 1}, {3, 1, 4, 1}}));

    // ----- construction 5 (m even >= 6, n = 6): one 6x6 seed block plus
    // 2x6 row-pair blocks below it.
    add(make_block(
        "Case5.A", 6, 6,
        {{1, -1, 1, 0}, {1, 0, 2, 0}, {2, 0, 2, 1}, {2, 1, 1, 1},
         {1, 1, 1, 2}, {1, 2, 2, 2}, {2, 2, 3, 2}, {3, 2, 4, 2},
         {4, 2, 4, 3}, {4, 3, 5, 3}, {5, 3, 5, 2}, {5, 2, 6, 2},
         {-1, 2, 0, 2}, {0, 2, 0, 3}, {0, 3, 1, 3}, {1, 3, 2, 3},
         {2, 3, 2, 4}, {2, 4, 3, 4}, {3, 4, 4, 4}, {4, 4, 4, 5},
         {4, 5, 5, 5}, {5, 5, 5, 4}, {5, 4, 6, 4}, {-1, 4, 0, 4},
         {0, 4, 0, 5}, {0, 5, 1, 5}, {1, 5, 1, 6}},
        {{3, -1, 3, 0}, {3, 0, 4, 0}, {4, 0, 5, 0}, {5, 0, 6, 0},
         {-1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1},
         {0, 1, -1, 1}, {6, 1, 5, 1}, {5, 1, 4, 1}, {4, 1, 3, 1},
         {3, 1, 2, 1}, {2, 1, 2, 2}, {2, 2, 2, 3}, {2, 3, 3, 3},
         {3, 3, 4, 3}, {4, 3, 4, 4}, {4, 4, 5, 4}, {5, 4, 5, 3},
         {5, 3, 6, 3}, {-1, 3, 0, 3}, {0, 3, 0, 4}, {0, 4, 1, 4},
         {1, 4, 2, 4}, {2, 4, 2, 5}, {2, 5, 3, 5}, {3, 5, 3, 6}},
        {{0, -1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2},
         {1, 2, 1, 3}, {1, 3, 1, 4}, {1, 4, 1, 5}, {1, 5, 2, 5},
         {2, 5, 2, 6}, {2, -1, 2, 0}, {2, 0, 3, 0}, {3, 0, 3, 1},
         {3, 1, 3, 2}, {3, 2, 3, 3}, {3, 3, 3, 4}, {3, 4, 3, 5},
         {3, 5, 4, 5}, {4, 5, 4, 6}, {4, -1, 4, 0}, {4, 0, 4, 1},
         {4, 1, 4, 2}, {4, 2, 5, 2}, {5, 2, 5, 1}, {5, 1, 5, 0},
         {5, 0, 5, -1}, {5, 6, 5, 5}, {5, 5, 6, 5}}));
    add(make_block(
        "Case5.B", 2, 6,
        {{-1, 2, 0, 2}, {0, 2, 0, 3}, {0, 3, 1, 3}, {1, 3, 1, 2},
         {1, 2, 2, 2}, {-1, 4, 0, 4}, {0, 4, 0, 5}, {0, 5, 1, 5},
         {1, 5, 1, 4}, {1, 4, 2, 4}},
        {{-1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 2, 0}, {-1, 1, 0, 1},
         {0, 1, 1, 1}, {1, 1, 2, 1}, {-1, 3, 0, 3}, {0, 3, 0, 4},
         {0, 4, 1, 4}, {1, 4, 1, 3}, {1, 3, 2, 3}},
        {{-1, 5, 0, 5}, {0, 5, 0, 6}, {0, -1, 0, 0}, {0, 0, 0, 1},
         {0, 1, 0, 2}, {0, 2, 1, 2}, {1, 2, 1, 1}, {1, 1, 1, 0},
         {1, 0, 1, -1}, {1, 6, 1, 5}, {1, 5, 2, 5}}));

    // ----- construction 6 (m even >= 6, n even >= 12): the 6x6 seed from
    // construction 5, repeating 6x6 blocks to its right, and full-width 2xN
    // row-pair blocks below (generated; see case6_c_block).
    add(make_block(
        "Case6.B", 6, 6,
        {{-1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, -1}, {1, 6, 1, 5},
         {1, 5, 2, 5}, {2, 5, 3, 5}, {3, 5, 3, 4}, {3, 4, 4, 4},
         {4, 4, 5, 4}, {5, 4, 6, 4}, {-1, 4, 0, 4}, {0, 4, 1, 4},
         {1, 4, 1, 3}, {1, 3, 2, 3}, {2, 3, 3, 3}, {3, 3, 3, 2},
         {3, 2, 4, 2}, {4, 2, 5, 2}, {5, 2, 6, 2}, {-1, 2, 0, 2},
         {0, 2, 1, 2}, {1, 2, 1, 1}, {1, 1, 2, 1}, {2, 1, 3, 1},
         {3, 1, 3, 0}, {3, 0, 4, 0}, {4, 0, 5, 0}, {5, 0, 6, 0}},
        {{-1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 0, 2, 0},
         {2, 0, 3, 0}, {3, 0, 3, -1}, {3, 6, 3, 5}, {3, 5, 4, 5},
         {4, 5, 5, 5}, {5, 5, 6, 5}, {-1, 5, 0, 5}, {0, 5, 1, 5},
         {1, 5, 1, 4}, {1, 4, 2, 4}, {2, 4, 3, 4}, {3, 4, 3, 3},
         {3, 3, 4, 3}, {4, 3, 5, 3}, {5, 3, 6, 3}, {-1, 3, 0, 3},
         {0, 3, 1, 3}, {1, 3, 1, 2}, {1, 2, 2, 2}, {2, 2, 3, 2},
         {3, 2, 3, 1}, {3, 1, 4, 1}, {4, 1, 5, 1}, {5, 1, 6, 1}},
        {{0, -1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 2}, {0, 2, 0, 3},
         {0, 3, 0, 4}, {0, 4, 0, 5}, {0, 5, 0, 6}, {2, -1, 2, 0},
         {2, 0, 2, 1}, {2, 1, 2, 2}, {2, 2, 2, 3}, {2, 3, 2, 4},
         {2, 4, 2, 5}, {2, 5, 2, 6}, {4, -1, 4, 0}, {4, 0, 4, 1},
         {4, 1, 4, 2}, {4, 2, 4, 3}, {4, 3, 4, 4}, {4, 4, 4, 5},
         {4, 5, 4, 6}, {5, -1, 5, 0}, {5, 0, 5, 1}, {5, 1, 5, 2},
         {5, 2, 5, 3}, {5, 3, 5, 4}, {5, 4, 5, 5}, {5, 5, 5, 6}}));
    add(case6_c_block(12));

    // ----- construction 7 (m even >= 6, n odd = 3+6N): a 6x3 seed block,
    // 6x6 blocks to its right, and below them 2x3 / 2x6 row-pair blocks.
    add(make_block(
        "Case7.A", 6, 3,
        {{1, -1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, -1, 1},
         {6, 1, 5, 1}, {5, 1, 5, 2}, {5, 2, 4, 2}, {4, 2, 4, 3},
         {4, -1, 4, 0}, {4, 0, 3, 0}, {3, 0, 3, 1}, {3, 1, 2, 1},
         {2, 1, 2, 2}, {2, 2, 1, 2}, {1, 2, 1, 3}},
        {{2, -1, 2, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1},
         {0, 1, 0, 2}, {0, 2, -1, 2}, {6, 2, 5, 2}, {5, 2, 5, 3},
         {5, -1, 5, 0}, {5, 0, 4, 0}, {4, 0, 4, 1}, {4, 1, 3, 1},
         {3, 1, 3, 2}, {3, 2, 2, 2}, {2, 2, 2, 3}},
        {{0, -1, 0, 0}, {0, 0, -1, 0}, {6, 0, 5, 0}, {5, 0, 5, 1},
         {5, 1, 4, 1}, {4, 1, 4, 2}, {4, 2, 3, 2}, {3, 2, 3, 3},
         {3, -1, 3, 0}, {3, 0, 2, 0}, {2, 0, 2, 1}, {2, 1, 1, 1},
         {1, 1, 1, 2}, {1, 2, 0, 2}, {0, 2, 0, 3}}));
    add(make_block(
        "Case7.B", 6, 6,
        {{1, -1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, -1, 1},
         {6, 1, 5, 1}, {5, 1, 5, 2}, {5, 2, 4, 2}, {4, 2, 4, 3},
         {4, 3, 3, 3}, {3, 3, 3, 4}, {3, 4, 2, 4}, {2, 4, 2, 5},
         {2, 5, 1, 5}, {1, 5, 1, 6}, {4, -1, 4, 0}, {4, 0, 3, 0},
         {3, 0, 3, 1}, {3, 1, 2, 1}, {2, 1, 2, 2}, {2, 2, 1, 2},
         {1, 2, 1, 3}, {1, 3, 0, 3}, {0, 3, 0, 4}, {0, 4, -1, 4},
         {6, 4, 5, 4}, {5, 4, 5, 5}, {5, 5, 4, 5}, {4, 5, 4, 6}},
        {{2, -1, 2, 0}, {2, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1},
         {0, 1, 0, 2}, {0, 2, -1, 2}, {6, 2, 5, 2}, {5, 2, 5, 3},
         {5, 3, 4, 3}, {4, 3, 4, 4}, {4, 4, 3, 4}, {3, 4, 3, 5},
         {3, 5, 2, 5}, {2, 5, 2, 6}, {5, -1, 5, 0}, {5, 0, 4, 0},
         {4, 0, 4, 1}, {4, 1, 3, 1}, {3, 1, 3, 2}, {3, 2, 2, 2},
         {2, 2, 2, 3}, {2, 3, 1, 3}, {1, 3, 1, 4}, {1, 4, 0, 4},
         {0, 4, 0, 5}, {0, 5, -1, 5}, {6, 5, 5, 5}, {5, 5, 5, 6}},
        {{0, -1, 0, 0}, {0, 0, -1, 0}, {6, 0, 5, 0}, {5, 0, 5, 1},
         {5, 1, 4, 1}, {4, 1, 4, 2}, {4, 2, 3, 2}, {3, 2, 3, 3},
         {3, 3, 2, 3}, {2, 3, 2, 4}, {2, 4, 1, 4}, {1, 4, 1, 5},
         {1, 5, 0, 5}, {0, 5, 0, 6}, {3, -1, 3, 0}, {3, 0, 2, 0},
         {2, 0, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 2}, {1, 2, 0, 2},
         {0, 2, 0, 3}, {0, 3, -1, 3}, {6, 3, 5, 3}, {5, 3, 5, 4},
         {5, 4, 4, 4}, {4, 4, 4, 5}, {4, 5, 3, 5}, {3, 5, 3, 6}}));
    add(make_block(
        "Case7.C", 2, 3,
        {{-1, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2}, {1, 2, 1, 1},
         {1, 1, 2, 1}},
        {{-1, 2, 0, 2}, {0, 2, 0, 3}, {0, -1, 0, 0}, {0, 0, 1, 0},
         {1, 0, 1, -1}, {1, 3, 1, 2}, {1, 2, 2, 2}},
        {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 0},
         {1, 0, 2, 0}}));
    add(make_block(
        "Case7.D", 2, 6,
        {{-1, 1, 0, 1}, {0, 1, 0, 2}, {0, 2, 1, 2}, {1, 2, 1, 1},
         {1, 1, 2, 1}, {-1, 4, 0, 4}, {0, 4, 0, 5}, {0, 5, 1, 5},
         {1, 5, 1, 4}, {1, 4, 2, 4}},
        {{-1, 2, 0, 2}, {0, 2, 0, 3}, {0, 3, 1, 3}, {1, 3, 1, 2},
         {1, 2, 2, 2}, {0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, -1},
         {-1, 5, 0, 5}, {0, 5, 0, 6}, {2, 5, 1, 5}, {1, 5, 1, 6}},
        {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 0},
         {1, 0, 2, 0}, {-1, 3, 0, 3}, {0, 3, 0, 4}, {0, 4, 1, 4},
         {1, 4, 1, 3}, {1, 3, 2, 3}}));

    return cat;
}

} // namespace

const std::map<std::string, Block>& block_catalog() {
    static const std::map<std::string, Block> catalog = build_catalog();
    return catalog;
}

Block case6_c_block(int n) {
    if (n < 12 || n % 6 != 0) {
        throw PreconditionError("row-pair block needs n = 6+6N with N >= 1, got n = " +
                                std::to_string(n));
    }
    const int N = (n - 6) / 6;

    Block b;
    b.name = "Case6.C";
    b.rows = 2;
    b.cols = n;

    // Color of the vertical edge entering the block at column c; the
    // vertical leaving the block at the bottom repeats the same pattern.
    auto boundary_color = [&](int c) -> Color {
        if (c == 2 || c == 4) return Color::Red;
        if (c == 5) return Color::Blue;
        if (c >= 6) return c % 2 == 0 ? Color::Red : Color::Yellow;
        return Color::Yellow; // c in {0, 1, 3}
    };
    // Color of the middle vertical (between the block's two rows) at column
    // c.  Between columns 5 and 2N+8 the pattern is offset by one column
    // against the boundary verticals; the paths jog sideways there.
    auto middle_color = [&](int c) -> Color {
        if (c == 2 || c == 4) return Color::Red;
        if (c == 2 * N + 8) return Color::Blue;
        if (c >= 5 && c <= 2 * N + 7) return c % 2 == 1 ? Color::Red : Color::Yellow;
        if (c >= 2 * N + 9) return c % 2 == 1 ? Color::Yellow : Color::Red;
        return Color::Yellow; // c in {0, 1, 3}
    };
    // Color of the horizontal edges (c, c+1), identical in both rows.
    auto horizontal_color = [&](int c) -> Color {
        if (c <= 4 || c >= 2 * N + 8) return Color::Blue;
        return c % 2 == 1 ? Color::Red : Color::Yellow;
    };

    for (int c = 0; c < n; ++c) {
        b.edges[static_cast<int>(boundary_color(c))].push_back(
            OffsetEdge{{-1, c}, {0, c}});
        b.edges[static_cast<int>(middle_color(c))].push_back(
            OffsetEdge{{0, c}, {1, c}});
        b.edges[static_cast<int>(boundary_color(c))].push_back(
            OffsetEdge{{1, c}, {2, c}});
        for (int r = 0; r < 2; ++r) {
            b.edges[static_cast<int>(horizontal_color(c))].push_back(
                OffsetEdge{{r, c}, {r, c + 1}});
        }
    }
    return b;
}

} // namespace cycdec
