#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "cycdec/errors.hpp"

// The torus graph C_m x C_n: vertices (i,j) with i mod m, j mod n; every
// vertex has a vertical neighbor (i+1,j) and a horizontal neighbor (i,j+1).
// Drawing convention throughout: (0,0) upper left, i grows downward (the
// vertical C_m), j grows rightward (the horizontal C_n).

namespace cycdec {

struct TorusDims {
    int m = 0; // vertical cycle length (number of rows)
    int n = 0; // horizontal cycle length (number of columns)

    friend bool operator==(const TorusDims&, const TorusDims&) = default;
};

inline bool dims_valid(TorusDims d) { return d.m >= 3 && d.n >= 3; }

// Throws InvalidDims unless both sides are at least 3.
void require_dims(TorusDims d);

struct Vertex {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Reduce arbitrary integer coordinates into [0,m) x [0,n).
Vertex reduce(int i, int j, TorusDims d);

enum class Orient : std::uint8_t { Vertical = 0, Horizontal = 1 };

// Canonical edge: stored as (u, successor of u), where the successor is
// (i+1, j) for Vertical and (i, j+1) for Horizontal, with wraparound.
// Each of the 2mn edges has exactly one such representation.
struct Edge {
    Vertex u;
    Vertex v;
    Orient o = Orient::Vertical;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.o == b.o;
    }
    // Lexicographic on the endpoint pair (u, v).  At most vertices this puts
    // the horizontal edge before the vertical one; at the wrap row the
    // vertical successor (0,j) sorts first.
    friend auto operator<=>(const Edge& a, const Edge& b) {
        return std::tie(a.u.i, a.u.j, a.v.i, a.v.j) <=>
               std::tie(b.u.i, b.u.j, b.v.i, b.v.j);
    }
};

struct Torus {
    TorusDims dims;
    std::vector<Vertex> vertices; // row-major: index i*n + j
    std::vector<Edge> edges;      // sorted by Edge ordering
};

// Builds the full vertex and edge sets.  Throws InvalidDims.
Torus build_torus(TorusDims d);

// Canonical representative of the edge {a,b}.  Order of the arguments does
// not matter.  Throws NotAnEdge if a and b are not adjacent.
Edge canonical_edge(Vertex a, Vertex b, TorusDims d);

// Dense index of a canonical edge: 2*(i*n + j) + (o == Horizontal).
// A fixed bijection onto [0, 2mn), convenient for flat arrays; it does not
// follow Edge ordering (which compares endpoint pairs).
int edge_index(const Edge& e, TorusDims d);

// Inverse of edge_index.
Edge edge_at(int index, TorusDims d);

std::string to_string(Vertex v);            // "(i,j)"
std::string to_string(const Edge& e);       // "(i,j)-(i,j)"

} // namespace cycdec
