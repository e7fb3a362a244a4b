#include "cycdec/four_phase.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace cycdec {

namespace {

int mod_reduce(int x, int mod) {
    int r = x % mod;
    return r < 0 ? r + mod : r;
}

struct Offset {
    int r, c;
};

// Base squares; all other labels are translates (see labeled_four).
constexpr std::array<Offset, 4> kR0{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
constexpr std::array<Offset, 4> kR1{{{0, 2}, {0, 3}, {1, 3}, {1, 2}}};
constexpr std::array<Offset, 4> kB0{{{-1, 1}, {-1, 2}, {0, 2}, {0, 1}}};
constexpr std::array<Offset, 4> kB1{{{1, 1}, {1, 2}, {2, 2}, {2, 1}}};
constexpr std::array<Offset, 4> kS0{{{0, 1}, {0, 2}, {1, 2}, {1, 1}}};

// The unit square's upper-left corner: the unique vertex u of the four
// with u+(0,1), u+(1,0) and u+(1,1) also present.
Vertex square_corner(const std::array<Vertex, 4>& verts, TorusDims d) {
    for (Vertex u : verts) {
        int hits = 0;
        for (Vertex w : verts) {
            if (w == reduce(u.i, u.j + 1, d) || w == reduce(u.i + 1, u.j, d) ||
                w == reduce(u.i + 1, u.j + 1, d)) {
                ++hits;
            }
        }
        if (hits == 3) return u;
    }
    throw StructuralError("four vertices starting at " + to_string(verts[0]) +
                          " do not form a unit square");
}

std::string lineage_label(Family f, int k, int a, int b) {
    return std::string(1, family_letter(f)) + "_" + std::to_string(4 * k) +
           "^{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

} // namespace

Decomposition checkerboard(TorusDims dims) {
    require_dims(dims);
    if (dims.m % 2 != 0 || dims.n % 2 != 0) {
        throw KnownImpossibleError(
            "no 4-cycle decomposition of " + std::to_string(dims.m) + "x" +
            std::to_string(dims.n) + ": both sides must be even");
    }
    Decomposition out;
    out.dims = dims;
    for (int y = 0; y < dims.m; ++y) {
        for (int z = 0; z < dims.n; ++z) {
            if ((y + z) % 2 != 0) continue;
            CycleWalk w;
            w.dims = dims;
            w.verts = {reduce(y, z, dims), reduce(y, z + 1, dims),
                       reduce(y + 1, z + 1, dims), reduce(y + 1, z, dims)};
            out.classes.push_back(std::move(w));
            out.labels.push_back("C4(" + std::to_string(y) + "," +
                                 std::to_string(z) + ")");
        }
    }
    return out;
}

char family_letter(Family f) {
    switch (f) {
    case Family::R: return 'R';
    case Family::B: return 'B';
    case Family::S: return 'S';
    case Family::T: return 'T';
    }
    return '?';
}

LabeledFour labeled_four(Family f, int i, int j, int m, int n) {
    if (m < 1 || n < 1) {
        throw InvalidDims("quarter-dimensions must be positive, got " +
                          std::to_string(m) + "," + std::to_string(n));
    }
    const int L = std::lcm(m, n), G = std::gcd(m, n);
    const TorusDims dims{4 * m, 4 * n};
    LabeledFour out;
    out.family = f;
    out.i = i = mod_reduce(i, 4 * L);
    out.j = j = mod_reduce(j, G);

    const std::array<Offset, 4>* base = nullptr;
    Offset shift{0, 0};
    switch (f) {
    case Family::R:
    case Family::B: {
        const bool odd = i % 2 != 0;
        if (f == Family::R) base = odd ? &kR1 : &kR0;
        else base = odd ? &kB1 : &kB0;
        shift = {2 * (i / 2) + 4 * j, 2 * (i / 2)};
        break;
    }
    case Family::S:
        base = &kS0;
        shift = {i + 4 * j, i};
        break;
    case Family::T:
        base = &kS0;
        shift = {i + 4 * j + 1, i - 1};
        break;
    }
    for (int t = 0; t < 4; ++t) {
        out.verts[t] =
            reduce((*base)[t].r + shift.r, (*base)[t].c + shift.c, dims);
    }
    return out;
}

std::vector<LabeledFour> label_checkerboard(int m, int n) {
    const int L = std::lcm(m, n), G = std::gcd(m, n);
    const TorusDims dims{4 * m, 4 * n};
    std::vector<LabeledFour> out;
    out.reserve(static_cast<size_t>(16) * L * G);
    for (Family f : {Family::R, Family::B, Family::S, Family::T}) {
        for (int i = 0; i < 4 * L; ++i) {
            for (int j = 0; j < G; ++j) {
                out.push_back(labeled_four(f, i, j, m, n));
            }
        }
    }
    // The R and B labels must enumerate the even-corner squares exactly
    // once, and S and T the odd-corner squares.
    std::set<std::pair<int, int>> even_seen, odd_seen;
    for (const LabeledFour& sq : out) {
        const Vertex c = square_corner(sq.verts, dims);
        const bool board = sq.family == Family::R || sq.family == Family::B;
        if (((c.i + c.j) % 2 == 0) != board) {
            throw StructuralError("square " +
                                  std::string(1, family_letter(sq.family)) +
                                  "^{" + std::to_string(sq.i) + "," +
                                  std::to_string(sq.j) + "} has corner " +
                                  to_string(c) + " of the wrong parity");
        }
        auto& seen = board ? even_seen : odd_seen;
        if (!seen.insert({c.i, c.j}).second) {
            throw StructuralError("two labels map to the square at " +
                                  to_string(c));
        }
    }
    const size_t half = static_cast<size_t>(8) * m * n;
    if (even_seen.size() != half || odd_seen.size() != half) {
        throw StructuralError("labeling misses squares: got " +
                              std::to_string(even_seen.size()) + "+" +
                              std::to_string(odd_seen.size()) + ", expected " +
                              std::to_string(half) + " each");
    }
    return out;
}

Decomposition combine(const Decomposition& d,
                      const std::array<Vertex, 4>& square) {
    // The square's edge cycle: vw, ww', w'v', v'v.
    std::array<Edge, 4> e;
    for (int t = 0; t < 4; ++t) {
        try {
            e[t] = canonical_edge(square[t], square[(t + 1) % 4], d.dims);
        } catch (const NotAnEdge&) {
            throw StructuralError("square step " + to_string(square[t]) +
                                  "-" + to_string(square[(t + 1) % 4]) +
                                  " is not an edge");
        }
    }
    std::array<int, 4> cls{-1, -1, -1, -1};
    for (size_t k = 0; k < d.classes.size(); ++k) {
        for (const Edge& ce : walk_edges(d.classes[k])) {
            for (int t = 0; t < 4; ++t) {
                if (ce == e[t]) cls[t] = static_cast<int>(k);
            }
        }
    }
    for (int t = 0; t < 4; ++t) {
        if (cls[t] < 0) {
            throw StructuralError("edge " + to_string(e[t]) +
                                  " lies in no class");
        }
        for (int u = 0; u < t; ++u) {
            if (cls[t] == cls[u]) {
                throw StructuralError("edges " + to_string(e[u]) + " and " +
                                      to_string(e[t]) +
                                      " lie in the same class");
            }
        }
    }

    // Classes of vw and w'v' fuse through the side edges, and vice versa.
    auto fused = [&](int a, int b, int add1, int add2) {
        std::vector<Edge> edges;
        for (int k : {cls[a], cls[b]}) {
            for (const Edge& ce : walk_edges(d.classes[k])) {
                if (!(ce == e[a]) && !(ce == e[b])) edges.push_back(ce);
            }
        }
        edges.push_back(e[add1]);
        edges.push_back(e[add2]);
        return trace_cycle(edges, d.dims);
    };
    CycleWalk merged_horiz = fused(0, 2, 1, 3);
    CycleWalk merged_vert = fused(1, 3, 0, 2);

    Decomposition out;
    out.dims = d.dims;
    for (size_t k = 0; k < d.classes.size(); ++k) {
        if (static_cast<int>(k) == cls[0] || static_cast<int>(k) == cls[1] ||
            static_cast<int>(k) == cls[2] || static_cast<int>(k) == cls[3]) {
            continue;
        }
        out.classes.push_back(d.classes[k]);
        out.labels.push_back(d.label(k));
    }
    out.classes.push_back(std::move(merged_horiz));
    out.labels.emplace_back();
    out.classes.push_back(std::move(merged_vert));
    out.labels.emplace_back();
    return out;
}

std::vector<FactorSplit> factor_splits(int k, int m, int n) {
    std::vector<FactorSplit> out;
    if (m < 1 || n < 1 || k < 1) return out;
    const int G = std::gcd(m, n);
    const long long L4 = 4LL * std::lcm(m, n);
    for (int g = 1; g <= G; ++g) {
        if (G % g != 0 || k % g != 0) continue;
        const int h = k / g;
        if (g <= h && L4 % h == 0) out.push_back(FactorSplit{g, h});
    }
    return out;
}

FactorSplit factor_split(int k, int m, int n) {
    std::vector<FactorSplit> all = factor_splits(k, m, n);
    if (all.empty()) {
        throw InfeasibleSplit(
            "no split of k=" + std::to_string(k) + " into g*h with g | gcd(" +
            std::to_string(m) + "," + std::to_string(n) + "), h | 4*lcm, g <= h");
    }
    return all.front();
}

Decomposition decompose_4k(int m, int n, int k,
                           std::optional<FactorSplit> split) {
    if (m < 1 || n < 1) {
        throw InvalidDims("quarter-dimensions must be positive, got " +
                          std::to_string(m) + "," + std::to_string(n));
    }
    FactorSplit fs = split ? *split : factor_split(k, m, n);
    {
        const std::vector<FactorSplit> all = factor_splits(k, m, n);
        if (std::find(all.begin(), all.end(), fs) == all.end()) {
            throw InfeasibleSplit("split (" + std::to_string(fs.g) + "," +
                                  std::to_string(fs.h) + ") is not valid for k=" +
                                  std::to_string(k) + " on quarter-dims " +
                                  std::to_string(m) + "," + std::to_string(n));
        }
    }
    const int g = fs.g, h = fs.h;
    const int L = std::lcm(m, n), G = std::gcd(m, n);
    const TorusDims dims{4 * m, 4 * n};

    const std::vector<LabeledFour> squares = label_checkerboard(m, n);
    auto square_at = [&](Family f, int i, int j) -> const LabeledFour& {
        const size_t idx =
            (static_cast<size_t>(f) * (4 * L) + i) * G + j;
        return squares[idx];
    };

    // Flat class registry over dense edge ids; classes start as the R and
    // B squares and fuse in place.
    const int edge_total = 2 * dims.m * dims.n;
    std::vector<int> class_of(edge_total, -1);
    std::vector<std::vector<int>> members;   // edge ids per class
    std::vector<std::vector<int>> heritage;  // indices into squares
    members.reserve(static_cast<size_t>(8) * m * n);
    for (size_t s = 0; s < squares.size(); ++s) {
        const LabeledFour& sq = squares[s];
        if (sq.family != Family::R && sq.family != Family::B) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        heritage.push_back({static_cast<int>(s)});
        for (int t = 0; t < 4; ++t) {
            const Edge edge =
                canonical_edge(sq.verts[t], sq.verts[(t + 1) % 4], dims);
            const int eid = edge_index(edge, dims);
            if (class_of[eid] != -1) {
                throw StructuralError("edge " + to_string(edge) +
                                      " claimed by two board squares");
            }
            class_of[eid] = id;
            members.back().push_back(eid);
        }
    }
    for (int eid = 0; eid < edge_total; ++eid) {
        if (class_of[eid] == -1) {
            throw StructuralError("edge " + to_string(edge_at(eid, dims)) +
                                  " not covered by the board squares");
        }
    }

    auto drop_edge = [&](int cls, int eid) {
        auto& v = members[cls];
        auto it = std::find(v.begin(), v.end(), eid);
        if (it == v.end()) {
            throw StructuralError("edge " + to_string(edge_at(eid, dims)) +
                                  " missing from its recorded class");
        }
        v.erase(it);
    };
    auto combine_at = [&](const LabeledFour& sq) {
        std::array<int, 4> eid;
        for (int t = 0; t < 4; ++t) {
            eid[t] = edge_index(
                canonical_edge(sq.verts[t], sq.verts[(t + 1) % 4], dims),
                dims);
        }
        const std::array<int, 4> cls{class_of[eid[0]], class_of[eid[1]],
                                     class_of[eid[2]], class_of[eid[3]]};
        for (int t = 0; t < 4; ++t) {
            for (int u = 0; u < t; ++u) {
                if (cls[t] == cls[u]) {
                    throw StructuralError(
                        "combining square " +
                        std::string(1, family_letter(sq.family)) + "^{" +
                        std::to_string(sq.i) + "," + std::to_string(sq.j) +
                        "}: edges " + to_string(edge_at(eid[u], dims)) +
                        " and " + to_string(edge_at(eid[t], dims)) +
                        " already share a class");
                }
            }
        }
        auto fuse = [&](int keep, int absorb, int out1, int out2, int in1,
                        int in2) {
            for (int moved : members[absorb]) class_of[moved] = keep;
            members[keep].insert(members[keep].end(), members[absorb].begin(),
                                 members[absorb].end());
            members[absorb].clear();
            heritage[keep].insert(heritage[keep].end(),
                                  heritage[absorb].begin(),
                                  heritage[absorb].end());
            heritage[absorb].clear();
            drop_edge(keep, out1);
            drop_edge(keep, out2);
            members[keep].push_back(in1);
            members[keep].push_back(in2);
        };
        // Top/bottom classes fuse through the side edges; the side classes
        // fuse through top and bottom.  Reassign all four moved edges only
        // after both fuses so each fuse sees consistent ownership.
        const int horiz_keep = cls[0], vert_keep = cls[1];
        fuse(horiz_keep, cls[2], eid[0], eid[2], eid[1], eid[3]);
        fuse(vert_keep, cls[3], eid[1], eid[3], eid[0], eid[2]);
        class_of[eid[1]] = horiz_keep;
        class_of[eid[3]] = horiz_keep;
        class_of[eid[0]] = vert_keep;
        class_of[eid[2]] = vert_keep;
    };

    // Phase 1: fuse along each diagonal strand into runs of h squares.
    for (int j = 0; j < G; ++j) {
        for (int i = 0; i < 4 * L; ++i) {
            if ((i + 1) % h != 0) combine_at(square_at(Family::S, i, j));
        }
    }
    // Phase 2: fuse g adjacent strand runs across the diagonals.
    for (int i = 0; i < 4 * L; ++i) {
        if (i % h != 0) continue;
        for (int j = 0; j < G; ++j) {
            if ((j + 1) % g != 0) combine_at(square_at(Family::T, i, j));
        }
    }

    Decomposition out;
    out.dims = dims;
    for (size_t c = 0; c < members.size(); ++c) {
        if (members[c].empty()) continue;
        std::vector<Edge> edges;
        edges.reserve(members[c].size());
        for (int eid : members[c]) edges.push_back(edge_at(eid, dims));
        CycleWalk w = trace_cycle(edges, dims);
        if (w.length() != 4 * k) {
            throw StructuralError("fused class has length " +
                                  std::to_string(w.length()) + ", expected " +
                                  std::to_string(4 * k));
        }
        const LabeledFour* root = nullptr;
        for (int s : heritage[c]) {
            const LabeledFour& sq = squares[s];
            if (sq.i % h == 0 && sq.j % g == 0) {
                if (root) {
                    throw StructuralError(
                        "fused class has two root squares: " +
                        lineage_label(root->family, 1, root->i, root->j) +
                        " and " + lineage_label(sq.family, 1, sq.i, sq.j));
                }
                root = &sq;
            }
        }
        if (!root) throw StructuralError("fused class has no root square");
        out.classes.push_back(std::move(w));
        out.labels.push_back(
            lineage_label(root->family, k, root->i / h, root->j / g));
    }
    if (out.classes.size() != static_cast<size_t>(8) * m * n / k) {
        throw StructuralError("expected " +
                              std::to_string(8LL * m * n / k) +
                              " classes, built " +
                              std::to_string(out.classes.size()));
    }
    return out;
}

} // namespace cycdec
