#include "cycdec/small_cases.hpp"

#include <string>

#include "cycdec/three_cycles.hpp"

namespace cycdec {

namespace {

CycleWalk column_cycle(int j, TorusDims d) {
    CycleWalk w;
    w.dims = d;
    for (int i = 0; i < d.m; ++i) w.verts.push_back(reduce(i, j, d));
    return w;
}

CycleWalk row_cycle(int i, TorusDims d) {
    CycleWalk w;
    w.dims = d;
    for (int j = 0; j < d.n; ++j) w.verts.push_back(reduce(i, j, d));
    return w;
}

// Perimeter of the 2 x 3 brick with upper-left corner (r, c): a 6-cycle.
CycleWalk brick_cycle(int r, int c, TorusDims d) {
    CycleWalk w;
    w.dims = d;
    w.verts = {reduce(r, c, d),     reduce(r, c + 1, d),
               reduce(r, c + 2, d), reduce(r + 1, c + 2, d),
               reduce(r + 1, c + 1, d), reduce(r + 1, c, d)};
    return w;
}

std::string coord_label(const char* stem, int a, int b) {
    return std::string(stem) + "(" + std::to_string(a) + "," +
           std::to_string(b) + ")";
}

// The 6 x 4N weave: column cycles on even columns; around each odd column
// pair, six bricks in two staggered vertical runs.
Decomposition weave_6_by_4n(TorusDims d) {
    Decomposition out;
    out.dims = d;
    const int N = d.n / 4;
    for (int j = 0; 2 * j < d.n; ++j) {
        out.classes.push_back(column_cycle(2 * j, d));
        out.labels.push_back("col" + std::to_string(2 * j));
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < N; ++j) {
            const Vertex a = reduce(2 * i - 1, 4 * j + 1, d);
            out.classes.push_back(brick_cycle(2 * i - 1, 4 * j + 1, d));
            out.labels.push_back(coord_label("W", a.i, a.j));
            const Vertex b = reduce(2 * i, 4 * j - 1, d);
            out.classes.push_back(brick_cycle(2 * i, 4 * j - 1, d));
            out.labels.push_back(coord_label("W", b.i, b.j));
        }
    }
    return out;
}

Decomposition rows_and_columns(TorusDims d) {
    Decomposition out;
    out.dims = d;
    for (int i = 0; i < d.m; ++i) {
        out.classes.push_back(row_cycle(i, d));
        out.labels.push_back("row" + std::to_string(i));
    }
    for (int j = 0; j < d.n; ++j) {
        out.classes.push_back(column_cycle(j, d));
        out.labels.push_back("col" + std::to_string(j));
    }
    return out;
}

} // namespace

Decomposition c6_decompose(TorusDims dims) {
    require_dims(dims);
    if (dims.m == 3 && dims.n == 3) return decompose_three_cycles(dims);
    if (dims.m == 6 && dims.n == 6) return rows_and_columns(dims);
    if (dims.m == 6 && dims.n % 4 == 0) return weave_6_by_4n(dims);
    if (dims.n == 6 && dims.m % 4 == 0) {
        return transpose(weave_6_by_4n(TorusDims{dims.n, dims.m}));
    }
    throw KnownImpossibleError(
        "no 6-cycle decomposition of " + std::to_string(dims.m) + "x" +
        std::to_string(dims.n) +
        ": exists only for 3x3, 6x6 and {6,4N} shapes");
}

Decomposition odd_decompose(TorusDims dims) {
    require_dims(dims);
    const int m = dims.m, n = dims.n;
    if (m % 2 == 0 || n % 2 == 0) {
        throw PreconditionError("both sides must be odd, got " +
                                std::to_string(m) + "x" + std::to_string(n));
    }
    if (m > n) {
        throw PreconditionError("needs m <= n, got " + std::to_string(m) +
                                "x" + std::to_string(n));
    }
    if (n >= 2 * m) {
        throw PreconditionError("needs n < 2m, got " + std::to_string(m) +
                                "x" + std::to_string(n));
    }
    const int jog_rows = n - m; // = 2(N-M): rows that carry the jogs
    Decomposition out;
    out.dims = dims;
    for (int j = 0; j < n; ++j) {
        CycleWalk w;
        w.dims = dims;
        // Jog right-down-left-down through the top rows, then run straight
        // down column j; length n = m + jog_rows.
        for (int t = 0; 2 * t < jog_rows; ++t) {
            w.verts.push_back(reduce(2 * t, j, dims));
            w.verts.push_back(reduce(2 * t, j + 1, dims));
            w.verts.push_back(reduce(2 * t + 1, j + 1, dims));
            w.verts.push_back(reduce(2 * t + 1, j, dims));
        }
        for (int i = jog_rows; i < m; ++i) w.verts.push_back(reduce(i, j, dims));
        out.classes.push_back(std::move(w));
        out.labels.push_back("C" + std::to_string(n) + "(" +
                             std::to_string(j) + ")");
    }
    for (int i = jog_rows; i < m; ++i) {
        out.classes.push_back(row_cycle(i, dims));
        out.labels.push_back("row" + std::to_string(i));
    }
    return out;
}

} // namespace cycdec
