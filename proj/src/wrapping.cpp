#include "cycdec/wrapping.hpp"

namespace cycdec {

namespace {

// Signed unit step between adjacent torus vertices, as seen by a lift to
// the infinite grid.  Exactly one coordinate moves by +-1.
std::pair<int, int> unit_step(Vertex a, Vertex b, TorusDims d) {
    const int up = (a.i - b.i + d.m) % d.m, down = (b.i - a.i + d.m) % d.m;
    const int left = (a.j - b.j + d.n) % d.n, right = (b.j - a.j + d.n) % d.n;
    if (down == 1 && left == 0 && right == 0) return {1, 0};
    if (up == 1 && left == 0 && right == 0) return {-1, 0};
    if (right == 1 && up == 0 && down == 0) return {0, 1};
    if (left == 1 && up == 0 && down == 0) return {0, -1};
    throw NotAnEdge("walk step " + to_string(a) + "-" + to_string(b) +
                    " is not an edge");
}

} // namespace

WrappingNumbers wrapping_numbers(const CycleWalk& c) {
    require_dims(c.dims);
    if (c.verts.size() < 3) {
        throw NotAnEdge("walk of " + std::to_string(c.verts.size()) +
                        " vertices has no well-formed edges");
    }
    long long di = 0, dj = 0;
    int vert_steps = 0, horiz_steps = 0;
    for (size_t t = 0; t < c.verts.size(); ++t) {
        const Vertex a = c.verts[t];
        const Vertex b = c.verts[(t + 1) % c.verts.size()];
        const auto [si, sj] = unit_step(a, b, c.dims);
        di += si;
        dj += sj;
        if (si != 0) ++vert_steps;
        else ++horiz_steps;
    }
    WrappingNumbers w;
    if (di % c.dims.m != 0 || dj % c.dims.n != 0) {
        throw StructuralError("lifted displacement (" + std::to_string(di) +
                              "," + std::to_string(dj) +
                              ") of a closed walk is not a multiple of dims");
    }
    w.v = static_cast<int>(std::abs(di) / c.dims.m);
    w.h = static_cast<int>(std::abs(dj) / c.dims.n);
    const int v_surplus = vert_steps - c.dims.m * w.v;
    const int h_surplus = horiz_steps - c.dims.n * w.h;
    if (v_surplus < 0 || h_surplus < 0 || v_surplus % 2 != 0 ||
        h_surplus % 2 != 0) {
        throw StructuralError("step counts " + std::to_string(vert_steps) +
                              "/" + std::to_string(horiz_steps) +
                              " inconsistent with wraps " +
                              std::to_string(w.v) + "/" + std::to_string(w.h));
    }
    w.l_v = v_surplus / 2;
    w.l_h = h_surplus / 2;
    return w;
}

bool wrapping_feasible(long long k, int m, int n) {
    if (k < 3) return false;
    // Any solution of k = n*h + m*v + 2*l reduces mod 2 in v and h (each
    // decrement by 2 moves a full wrap pair into l), so four cases decide.
    for (int v : {0, 1}) {
        for (int h : {0, 1}) {
            const long long rem = k - static_cast<long long>(m) * v -
                                  static_cast<long long>(n) * h;
            if (rem < 0 || rem % 2 != 0) continue;
            if (v == 0 && h == 0 && k < 4) continue;
            return true;
        }
    }
    return false;
}

} // namespace cycdec
