#include "cycdec/torus.hpp"

#include <algorithm>

namespace cycdec {

void require_dims(TorusDims d) {
    if (!dims_valid(d)) {
        throw InvalidDims("torus dimensions must both be at least 3, got " +
                          std::to_string(d.m) + "x" + std::to_string(d.n));
    }
}

Vertex reduce(int i, int j, TorusDims d) {
    int ri = i % d.m;
    if (ri < 0) ri += d.m;
    int rj = j % d.n;
    if (rj < 0) rj += d.n;
    return Vertex{ri, rj};
}

Torus build_torus(TorusDims d) {
    require_dims(d);
    Torus t;
    t.dims = d;
    t.vertices.reserve(static_cast<size_t>(d.m) * d.n);
    t.edges.reserve(static_cast<size_t>(2 * d.m) * d.n);
    for (int i = 0; i < d.m; ++i) {
        for (int j = 0; j < d.n; ++j) {
            t.vertices.push_back(Vertex{i, j});
            Vertex u{i, j};
            t.edges.push_back(Edge{u, Vertex{(i + 1) % d.m, j}, Orient::Vertical});
            t.edges.push_back(Edge{u, Vertex{i, (j + 1) % d.n}, Orient::Horizontal});
        }
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

Edge canonical_edge(Vertex a, Vertex b, TorusDims d) {
    require_dims(d);
    a = reduce(a.i, a.j, d);
    b = reduce(b.i, b.j, d);
    if (a.i == b.i) {
        // horizontal candidate: columns must differ by 1 mod n
        if ((a.j + 1) % d.n == b.j)
            return Edge{a, b, Orient::Horizontal};
        if ((b.j + 1) % d.n == a.j)
            return Edge{b, a, Orient::Horizontal};
    } else if (a.j == b.j) {
        if ((a.i + 1) % d.m == b.i)
            return Edge{a, b, Orient::Vertical};
        if ((b.i + 1) % d.m == a.i)
            return Edge{b, a, Orient::Vertical};
    }
    throw NotAnEdge("vertices " + to_string(a) + " and " + to_string(b) +
                    " are not adjacent in C_" + std::to_string(d.m) +
                    " x C_" + std::to_string(d.n));
}

int edge_index(const Edge& e, TorusDims d) {
    return 2 * (e.u.i * d.n + e.u.j) + (e.o == Orient::Horizontal ? 1 : 0);
}

Edge edge_at(int index, TorusDims d) {
    int cell = index / 2;
    Vertex u{cell / d.n, cell % d.n};
    if (index % 2 == 0)
        return Edge{u, Vertex{(u.i + 1) % d.m, u.j}, Orient::Vertical};
    return Edge{u, Vertex{u.i, (u.j + 1) % d.n}, Orient::Horizontal};
}

std::string to_string(Vertex v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string to_string(const Edge& e) {
    return to_string(e.u) + "-" + to_string(e.v);
}

} // namespace cycdec
