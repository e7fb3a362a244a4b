#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycdec/torus.hpp"

namespace cycdec {

// A closed walk given by its vertex sequence; the edge back from the last
// vertex to the first is implicit.  A well-formed CycleWalk is a simple
// cycle: consecutive vertices adjacent, all vertices distinct, all implied
// edges distinct.  Lengths 3 (only when m=3 or n=3), m, n and any even
// length >= 4 are realizable.
struct CycleWalk {
    TorusDims dims;
    std::vector<Vertex> verts;

    int length() const { return static_cast<int>(verts.size()); }
};

// Implied edge list of the walk.  Throws NotAnEdge on a non-adjacent step;
// validate() has its own non-throwing path.
std::vector<Edge> walk_edges(const CycleWalk& w);

// An edge partition of the torus into cycle classes.  labels is either
// empty (no labels) or one string per class; empty string = unlabeled.
struct Decomposition {
    TorusDims dims;
    std::vector<CycleWalk> classes;
    std::vector<std::string> labels;

    std::string label(size_t k) const {
        return k < labels.size() ? labels[k] : std::string();
    }
};

struct ClassIssue {
    int class_index = -1;
    std::string what;
};

// Everything validate() learned.  Offending items are chosen by canonical
// order (smallest canonical edge), not discovery order, so the report is
// deterministic however the checks are scheduled.
struct ValidationReport {
    bool pass = false;
    std::vector<std::string> structure_issues; // dims/labels malformed
    std::vector<ClassIssue> class_issues;      // ordered by class index
    std::optional<Edge> first_shared_edge;     // smallest edge in >= 2 classes
    std::optional<Edge> first_missing_edge;    // smallest edge in no class
    std::map<int, int> length_histogram;       // class length -> count

    std::string summary() const; // multi-line human-readable report
};

// Checks every class (closed simple cycle), pairwise disjointness and full
// coverage of the 2mn edges.  Never throws; all failures are reported.
ValidationReport validate(const Decomposition& d);

// Rotates the walk to start at its smallest vertex, oriented toward the
// smaller of that vertex's two walk neighbors.  Identity on walks already
// in canonical form; walks shorter than 3 vertices are returned unchanged.
CycleWalk canonical_walk(const CycleWalk& w);

// Canonical form of a decomposition: every walk canonicalized, classes
// sorted by lexicographically smallest canonical edge (ties broken by the
// full vertex sequence, then label), labels permuted alongside.
Decomposition canonicalize(const Decomposition& d);

// Equality up to class order and per-walk rotation/reflection; labels must
// match class-for-class after canonicalization.
bool equivalent(const Decomposition& a, const Decomposition& b);

// Shared helper for constructors: stitches a set of edges into the unique
// simple cycle they form.  Throws StructuralError (naming an offending
// vertex or edge) if the edge set is not a single vertex-disjoint cycle.
CycleWalk trace_cycle(const std::vector<Edge>& edges, TorusDims d);

// Mirror across the main diagonal: dims (m,n) -> (n,m), every vertex
// (i,j) -> (j,i).  Labels and class order are kept.
Decomposition transpose(const Decomposition& d);

} // namespace cycdec
