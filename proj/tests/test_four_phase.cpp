#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cycdec/four_phase.hpp"
#include "cycdec/textio.hpp"
#include "doctest.h"

using namespace cycdec;

namespace {

std::array<Vertex, 4> verts_of(Family f, int i, int j, int m, int n) {
    return labeled_four(f, i, j, m, n).verts;
}

} // namespace

TEST_SUITE("four_phase") {

TEST_CASE("checkerboard tiles even-by-even tori") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{
             {4, 4}, {6, 8}, {12, 24}, {4, 10}}) {
        INFO(m, "x", n);
        Decomposition d = checkerboard(TorusDims{m, n});
        CHECK(d.classes.size() == static_cast<size_t>(m) * n / 2);
        for (const CycleWalk& w : d.classes) CHECK(w.length() == 4);
        ValidationReport rep = validate(d);
        INFO(rep.summary());
        CHECK(rep.pass);
    }
    CHECK(checkerboard(TorusDims{4, 4}).labels[0] == "C4(0,0)");
}

TEST_CASE("checkerboard rejects odd sides") {
    CHECK_THROWS_AS(checkerboard(TorusDims{5, 6}), KnownImpossibleError);
    CHECK_THROWS_AS(checkerboard(TorusDims{6, 5}), KnownImpossibleError);
    CHECK_THROWS_AS(checkerboard(TorusDims{3, 3}), KnownImpossibleError);
    CHECK_THROWS_AS(checkerboard(TorusDims{2, 4}), InvalidDims);
}

TEST_CASE("base squares and translation recurrences") {
    using V4 = std::array<Vertex, 4>;
    CHECK(verts_of(Family::R, 0, 0, 3, 6) ==
          V4{Vertex{0, 0}, Vertex{0, 1}, Vertex{1, 1}, Vertex{1, 0}});
    CHECK(verts_of(Family::R, 1, 0, 3, 6) ==
          V4{Vertex{0, 2}, Vertex{0, 3}, Vertex{1, 3}, Vertex{1, 2}});
    CHECK(verts_of(Family::R, 2, 0, 3, 6) ==
          V4{Vertex{2, 2}, Vertex{2, 3}, Vertex{3, 3}, Vertex{3, 2}});
    CHECK(verts_of(Family::B, 0, 0, 3, 6) ==
          V4{Vertex{11, 1}, Vertex{11, 2}, Vertex{0, 2}, Vertex{0, 1}});
    CHECK(verts_of(Family::B, 1, 0, 3, 6) ==
          V4{Vertex{1, 1}, Vertex{1, 2}, Vertex{2, 2}, Vertex{2, 1}});
    CHECK(verts_of(Family::S, 0, 0, 3, 6) ==
          V4{Vertex{0, 1}, Vertex{0, 2}, Vertex{1, 2}, Vertex{1, 1}});
    CHECK(verts_of(Family::S, 1, 0, 3, 6) ==
          V4{Vertex{1, 2}, Vertex{1, 3}, Vertex{2, 3}, Vertex{2, 2}});
    CHECK(verts_of(Family::T, 0, 0, 3, 6) ==
          V4{Vertex{1, 0}, Vertex{1, 1}, Vertex{2, 1}, Vertex{2, 0}});
    // Column shift: +(4j, 0); index wraparound at 4*lcm and gcd.
    CHECK(verts_of(Family::R, 0, 1, 3, 6) ==
          V4{Vertex{4, 0}, Vertex{4, 1}, Vertex{5, 1}, Vertex{5, 0}});
    CHECK(verts_of(Family::R, 24, 3, 3, 6) == verts_of(Family::R, 0, 0, 3, 6));
    CHECK(family_letter(Family::R) == 'R');
    CHECK(family_letter(Family::T) == 'T');
}

TEST_CASE("labeling enumerates both square colorings bijectively") {
    for (auto [m, n] :
         std::vector<std::pair<int, int>>{{1, 1}, {3, 6}, {2, 5}}) {
        INFO(m, "x", n);
        std::vector<LabeledFour> all = label_checkerboard(m, n);
        const int L = std::lcm(m, n), G = std::gcd(m, n);
        CHECK(all.size() == static_cast<size_t>(16) * L * G);
        size_t r_count = 0;
        for (const LabeledFour& sq : all) {
            if (sq.family == Family::R) ++r_count;
        }
        CHECK(r_count == static_cast<size_t>(4) * m * n);
    }
    CHECK(label_checkerboard(3, 6).size() == 288);
}

TEST_CASE("combining at a recolorable square fuses two class pairs") {
    Decomposition board = checkerboard(TorusDims{12, 24});
    REQUIRE(board.classes.size() == 144);
    Decomposition after = combine(board, verts_of(Family::S, 0, 0, 3, 6));
    CHECK(after.classes.size() == 142);
    ValidationReport rep = validate(after);
    INFO(rep.summary());
    CHECK(rep.pass);
    CHECK(rep.length_histogram == std::map<int, int>{{4, 140}, {8, 2}});
    // The two fused classes sit at the end, unlabeled; survivors keep labels.
    CHECK(after.labels[141].empty());
    CHECK(after.labels[140].empty());
    CHECK(!after.labels[0].empty());
}

TEST_CASE("combining requires four pairwise distinct classes") {
    Decomposition board = checkerboard(TorusDims{12, 24});
    Decomposition once = combine(board, verts_of(Family::S, 0, 0, 3, 6));
    // The same square now borders only two classes.
    CHECK_THROWS_AS(combine(once, verts_of(Family::S, 0, 0, 3, 6)),
                    StructuralError);
    // Not a unit square: a path of three vertices plus a repeat.
    CHECK_THROWS_AS(
        combine(board, std::array<Vertex, 4>{Vertex{0, 0}, Vertex{0, 1},
                                             Vertex{0, 2}, Vertex{0, 1}}),
        StructuralError);
}

TEST_CASE("factor splits obey g | gcd, h | 4*lcm, g <= h, ascending g") {
    using FS = std::vector<FactorSplit>;
    CHECK(factor_splits(3, 3, 6) == FS{{1, 3}});
    // 4*lcm(3,6) = 24 excludes h = 9, so only the balanced split remains.
    CHECK(factor_splits(9, 3, 6) == FS{{3, 3}});
    CHECK(factor_split(9, 3, 6) == FactorSplit{3, 3});
    CHECK(factor_splits(12, 3, 6) == FS{{1, 12}, {3, 4}});
    CHECK(factor_splits(4, 3, 6) == FS{{1, 4}});
    CHECK(factor_splits(1, 3, 6) == FS{{1, 1}});
    CHECK(factor_splits(5, 3, 6).empty());
    CHECK(factor_split(12, 3, 6) == FactorSplit{1, 12});
    CHECK(factor_split(1, 5, 7) == FactorSplit{1, 1});
    CHECK_THROWS_AS(factor_split(5, 3, 6), InfeasibleSplit);
    CHECK_THROWS_AS(factor_split(0, 3, 6), InfeasibleSplit);
    // Explicit invalid split is rejected even when k itself is feasible.
    CHECK_THROWS_AS(decompose_4k(3, 6, 9, FactorSplit{9, 1}),
                    InfeasibleSplit);
}

TEST_CASE("frozen class counts for the 12x24 torus") {
    struct Fix {
        int k;
        std::optional<FactorSplit> split;
        size_t classes;
    };
    for (Fix f : std::vector<Fix>{{1, std::nullopt, 144},
                                  {3, std::nullopt, 48},
                                  {4, std::nullopt, 36},
                                  {9, std::nullopt, 16},
                                  {9, FactorSplit{3, 3}, 16},
                                  {12, FactorSplit{3, 4}, 12},
                                  {72, std::nullopt, 2}}) {
        INFO("k=", f.k);
        Decomposition d = decompose_4k(3, 6, f.k, f.split);
        CHECK(d.dims == TorusDims{12, 24});
        CHECK(d.classes.size() == f.classes);
        for (const CycleWalk& w : d.classes) CHECK(w.length() == 4 * f.k);
        ValidationReport rep = validate(d);
        INFO(rep.summary());
        CHECK(rep.pass);
        std::set<std::string> labels(d.labels.begin(), d.labels.end());
        CHECK(labels.size() == d.classes.size());
    }
}

TEST_CASE("quarter-dims one-by-one yields two Hamiltonian cycles") {
    Decomposition d = decompose_4k(1, 1, 4);
    CHECK(d.dims == TorusDims{4, 4});
    REQUIRE(d.classes.size() == 2);
    CHECK(d.classes[0].length() == 16);
    CHECK(d.classes[1].length() == 16);
    CHECK(validate(d).pass);
}

TEST_CASE("k = 1 returns the labeled checkerboard") {
    Decomposition d = decompose_4k(2, 3, 1);
    CHECK(d.classes.size() == 48);
    for (const CycleWalk& w : d.classes) CHECK(w.length() == 4);
    CHECK(validate(d).pass);
    int r4 = 0, b4 = 0;
    for (const std::string& label : d.labels) {
        if (label.rfind("R_4^{", 0) == 0) ++r4;
        if (label.rfind("B_4^{", 0) == 0) ++b4;
    }
    CHECK(r4 == 24);
    CHECK(b4 == 24);
}

TEST_CASE("lineage labels name the root board square") {
    // With k=4 and split (1,4), runs of four diagonal squares fuse; the
    // class descended from squares 12..15 of strand 1 keeps index (3,1).
    Decomposition d = decompose_4k(3, 6, 4);
    auto it = std::find(d.labels.begin(), d.labels.end(), "R_16^{3,1}");
    REQUIRE(it != d.labels.end());
    const CycleWalk& w = d.classes[it - d.labels.begin()];
    std::set<std::pair<int, int>> got;
    for (Vertex v : w.verts) got.insert({v.i, v.j});
    std::set<std::pair<int, int>> want;
    for (int i = 12; i <= 15; ++i) {
        for (Vertex v : verts_of(Family::R, i, 1, 3, 6)) {
            want.insert({v.i, v.j});
        }
    }
    CHECK(got == want);
}

TEST_CASE("every split of every divisor validates on small quarter-dims") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 4}}) {
        for (int k = 1; k <= 4 * m * n; ++k) {
            if ((4 * m * n) % k != 0) continue;
            for (const FactorSplit& fs : factor_splits(k, m, n)) {
                INFO("m=", m, " n=", n, " k=", k, " g=", fs.g, " h=", fs.h);
                Decomposition d = decompose_4k(m, n, k, fs);
                CHECK(d.classes.size() == static_cast<size_t>(8) * m * n / k);
                ValidationReport rep = validate(d);
                INFO(rep.summary());
                CHECK(rep.pass);
            }
        }
    }
}

TEST_CASE("four-phase decompositions are deterministic") {
    Decomposition a = decompose_4k(3, 6, 9, FactorSplit{3, 3});
    Decomposition b = decompose_4k(3, 6, 9, FactorSplit{3, 3});
    CHECK(serialize(a) == serialize(b));
}

} // TEST_SUITE
