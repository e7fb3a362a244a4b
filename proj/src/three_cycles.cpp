#include "cycdec/three_cycles.hpp"

#include <algorithm>

namespace cycdec {

namespace {

bool guard_holds(CaseNumber which, TorusDims d) {
    const bool m_even = d.m % 2 == 0;
    const bool n_even = d.n % 2 == 0;
    switch (which) {
    case CaseNumber::Case1: return d.m % 2 == 1;
    case CaseNumber::Case2: return d.m == 4 && n_even;
    case CaseNumber::Case3: return d.m == 4 && d.n == 3;
    case CaseNumber::Case4: return d.m == 4 && d.n >= 9 && !n_even;
    case CaseNumber::Case5: return d.m >= 6 && m_even && d.n == 6;
    case CaseNumber::Case6: return d.m >= 6 && m_even && d.n >= 12 && n_even;
    case CaseNumber::Case7: return d.m >= 6 && m_even && !n_even;
    }
    return false;
}

const Block& catalog_block(const std::string& name) {
    return block_catalog().at(name);
}

// Block placements for one construction.  Generated blocks (the full-width
// row pairs of construction 6) are stored in `generated` so the returned
// pointers stay valid for the caller's lifetime.
std::vector<BlockInstance> placements(CaseNumber which, TorusDims d,
                                      std::vector<Block>& generated) {
    std::vector<BlockInstance> out;
    auto put = [&out](const Block& b, int r, int c) {
        out.push_back(BlockInstance{&b, r, c});
    };
    switch (which) {
    case CaseNumber::Case1: { // m = 3+2M, n = 3N
        const int M = (d.m - 3) / 2, N = d.n / 3;
        for (int J = 0; J < N; ++J) put(catalog_block("Case1.A"), 0, 3 * J);
        for (int I = 0; I < M; ++I)
            for (int J = 0; J < N; ++J)
                put(catalog_block("Case1.B"), 3 + 2 * I, 3 * J);
        break;
    }
    case CaseNumber::Case2: { // m = 4, n = 6+6N
        const int N = (d.n - 6) / 6;
        put(catalog_block("Case2.A"), 0, 0);
        for (int J = 0; J < N; ++J) put(catalog_block("Case2.B"), 0, 6 + 6 * J);
        break;
    }
    case CaseNumber::Case3:
        put(catalog_block("Case3.A"), 0, 0);
        break;
    case CaseNumber::Case4: { // m = 4, n = 9+6N; connector runs between anchors
        const int N = (d.n - 9) / 6;
        put(catalog_block("Case4.A1"), 0, 2 * N);
        put(catalog_block("Case4.A2"), 0, 3 + 4 * N);
        put(catalog_block("Case4.A3"), 0, 6 + 6 * N);
        for (int J = 0; J < N; ++J) {
            put(catalog_block("Case4.B1"), 0, 2 * J);
            put(catalog_block("Case4.B2"), 0, 3 + 2 * N + 2 * J);
            put(catalog_block("Case4.B3"), 0, 6 + 4 * N + 2 * J);
        }
        break;
    }
    case CaseNumber::Case5: { // m = 6+2M, n = 6
        const int M = (d.m - 6) / 2;
        put(catalog_block("Case5.A"), 0, 0);
        for (int I = 0; I < M; ++I) put(catalog_block("Case5.B"), 6 + 2 * I, 0);
        break;
    }
    case CaseNumber::Case6: { // m = 6+2M, n = 6+6N
        const int M = (d.m - 6) / 2, N = (d.n - 6) / 6;
        put(catalog_block("Case5.A"), 0, 0);
        for (int J = 0; J < N; ++J) put(catalog_block("Case6.B"), 0, 6 + 6 * J);
        if (M > 0) {
            generated.push_back(case6_c_block(d.n));
            for (int I = 0; I < M; ++I) put(generated.back(), 6 + 2 * I, 0);
        }
        break;
    }
    case CaseNumber::Case7: { // m = 6+2M, n = 3+6N
        const int M = (d.m - 6) / 2, N = (d.n - 3) / 6;
        put(catalog_block("Case7.A"), 0, 0);
        for (int J = 0; J < N; ++J) put(catalog_block("Case7.B"), 0, 3 + 6 * J);
        for (int I = 0; I < M; ++I) {
            put(catalog_block("Case7.C"), 6 + 2 * I, 0);
            for (int J = 0; J < N; ++J)
                put(catalog_block("Case7.D"), 6 + 2 * I, 3 + 6 * J);
        }
        break;
    }
    }
    return out;
}

} // namespace

CaseId select_case(TorusDims d) {
    require_dims(d);
    if (d.n % 3 != 0) {
        throw PreconditionError("construction needs 3 | n, got n = " +
                                std::to_string(d.n));
    }
    CaseId id;
    if (d.m % 2 == 1) id.number = CaseNumber::Case1;
    else if (d.m == 4 && d.n % 2 == 0) id.number = CaseNumber::Case2;
    else if (d.m == 4 && d.n == 3) id.number = CaseNumber::Case3;
    else if (d.m == 4) id.number = CaseNumber::Case4;
    else if (d.n == 6) id.number = CaseNumber::Case5;
    else if (d.n % 2 == 0) id.number = CaseNumber::Case6;
    else id.number = CaseNumber::Case7;
    return id;
}

Decomposition assemble_case(CaseNumber which, TorusDims d) {
    require_dims(d);
    if (d.n % 3 != 0 || !guard_holds(which, d)) {
        throw PreconditionError("construction " +
                                std::to_string(static_cast<int>(which)) +
                                " does not apply to " + std::to_string(d.m) +
                                "x" + std::to_string(d.n));
    }

    std::vector<Block> generated;
    const std::vector<BlockInstance> inst = placements(which, d, generated);

    const int edge_count = 2 * d.m * d.n;
    std::vector<int> color_of(edge_count, -1);
    std::vector<const char*> colored_by(edge_count, nullptr);

    for (const BlockInstance& bi : inst) {
        for (int c = 0; c < 3; ++c) {
            for (const OffsetEdge& oe : bi.block->edges[c]) {
                Vertex a = reduce(bi.row_shift + oe.a.r, bi.col_shift + oe.a.c, d);
                Vertex b = reduce(bi.row_shift + oe.b.r, bi.col_shift + oe.b.c, d);
                const Edge e = canonical_edge(a, b, d);
                const int id = edge_index(e, d);
                if (color_of[id] != -1 && color_of[id] != c) {
                    throw ColorConflict(
                        "edge " + to_string(e) + " colored " +
                        color_name(static_cast<Color>(color_of[id])) + " by " +
                        colored_by[id] + " but " +
                        color_name(static_cast<Color>(c)) + " by " +
                        bi.block->name);
                }
                color_of[id] = c;
                colored_by[id] = bi.block->name.c_str();
            }
        }
    }

    std::array<std::vector<Edge>, 3> classes;
    for (const Edge& e : build_torus(d).edges) {
        const int c = color_of[edge_index(e, d)];
        if (c == -1) {
            throw StructuralError("edge " + to_string(e) +
                                  " not covered by any block");
        }
        classes[c].push_back(e);
    }
    const int want = edge_count / 3;
    for (int c = 0; c < 3; ++c) {
        if (static_cast<int>(classes[c].size()) != want) {
            throw StructuralError(
                std::string(color_name(static_cast<Color>(c))) + " class has " +
                std::to_string(classes[c].size()) + " edges, expected " +
                std::to_string(want));
        }
    }

    Decomposition out;
    out.dims = d;
    for (int c = 0; c < 3; ++c) {
        out.classes.push_back(trace_cycle(classes[c], d));
        out.labels.emplace_back(color_name(static_cast<Color>(c)));
    }
    return out;
}

Decomposition decompose_three_cycles(TorusDims d) {
    require_dims(d);
    if (d.n % 3 == 0) {
        return assemble_case(select_case(d).number, d);
    }
    if (d.m % 3 != 0) {
        throw PreconditionError(
            "three equal cycles need 3 | m or 3 | n, got " +
            std::to_string(d.m) + "x" + std::to_string(d.n));
    }
    const TorusDims t{d.n, d.m};
    return transpose(assemble_case(select_case(t).number, t));
}

} // namespace cycdec
