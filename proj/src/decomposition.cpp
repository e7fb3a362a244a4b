#include "cycdec/decomposition.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace cycdec {

std::vector<Edge> walk_edges(const CycleWalk& w) {
    std::vector<Edge> out;
    const size_t len = w.verts.size();
    out.reserve(len);
    for (size_t p = 0; p < len; ++p) {
        out.push_back(canonical_edge(w.verts[p], w.verts[(p + 1) % len], w.dims));
    }
    return out;
}

namespace {

bool in_range(Vertex v, TorusDims d) {
    return v.i >= 0 && v.i < d.m && v.j >= 0 && v.j < d.n;
}

// Non-throwing adjacency probe used by validate().
bool try_edge(Vertex a, Vertex b, TorusDims d, Edge& out) {
    if (a.i == b.i) {
        if ((a.j + 1) % d.n == b.j) { out = Edge{a, b, Orient::Horizontal}; return true; }
        if ((b.j + 1) % d.n == a.j) { out = Edge{b, a, Orient::Horizontal}; return true; }
    } else if (a.j == b.j) {
        if ((a.i + 1) % d.m == b.i) { out = Edge{a, b, Orient::Vertical}; return true; }
        if ((b.i + 1) % d.m == a.i) { out = Edge{b, a, Orient::Vertical}; return true; }
    }
    return false;
}

} // namespace

ValidationReport validate(const Decomposition& d) {
    ValidationReport rep;
    if (!dims_valid(d.dims)) {
        rep.structure_issues.push_back("invalid torus dimensions " +
                                       std::to_string(d.dims.m) + "x" +
                                       std::to_string(d.dims.n));
        return rep;
    }
    if (!d.labels.empty() && d.labels.size() != d.classes.size()) {
        rep.structure_issues.push_back("label count does not match class count");
    }

    const int edge_count = 2 * d.dims.m * d.dims.n;
    std::vector<int> cover(edge_count, 0);

    for (size_t k = 0; k < d.classes.size(); ++k) {
        const CycleWalk& w = d.classes[k];
        const int ck = static_cast<int>(k);
        rep.length_histogram[w.length()]++;
        if (w.dims != d.dims) {
            rep.class_issues.push_back({ck, "walk dims differ from decomposition dims"});
            continue;
        }
        if (w.length() < 3) {
            rep.class_issues.push_back({ck, "fewer than 3 vertices"});
            continue;
        }

        bool coords_ok = true;
        for (size_t p = 0; p < w.verts.size(); ++p) {
            if (!in_range(w.verts[p], d.dims)) {
                rep.class_issues.push_back(
                    {ck, "vertex " + std::to_string(p) + " = " + to_string(w.verts[p]) +
                             " out of range"});
                coords_ok = false;
                break;
            }
        }
        if (!coords_ok) continue;

        std::vector<Vertex> sorted = w.verts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            Vertex dup = *std::adjacent_find(sorted.begin(), sorted.end());
            rep.class_issues.push_back({ck, "repeated vertex " + to_string(dup)});
        }

        std::vector<int> ids;
        ids.reserve(w.verts.size());
        bool steps_ok = true;
        for (size_t p = 0; p < w.verts.size(); ++p) {
            Vertex a = w.verts[p];
            Vertex b = w.verts[(p + 1) % w.verts.size()];
            Edge e;
            if (!try_edge(a, b, d.dims, e)) {
                rep.class_issues.push_back(
                    {ck, "non-adjacent step " + std::to_string(p) + ": " + to_string(a) +
                             " -> " + to_string(b)});
                steps_ok = false;
                continue;
            }
            ids.push_back(edge_index(e, d.dims));
        }
        // A simple closed walk over distinct vertices cannot repeat an edge,
        // but report it directly when vertex distinctness already failed.
        std::vector<int> idsorted = ids;
        std::sort(idsorted.begin(), idsorted.end());
        if (std::adjacent_find(idsorted.begin(), idsorted.end()) != idsorted.end()) {
            int dup = *std::adjacent_find(idsorted.begin(), idsorted.end());
            rep.class_issues.push_back(
                {ck, "repeated edge " + to_string(edge_at(dup, d.dims))});
            steps_ok = false;
        }
        (void)steps_ok;
        for (int id : ids) cover[id]++;
    }

    // Report offending edges in canonical Edge order, not dense-index order.
    for (const Edge& e : build_torus(d.dims).edges) {
        int c = cover[edge_index(e, d.dims)];
        if (c > 1 && !rep.first_shared_edge) rep.first_shared_edge = e;
        if (c == 0 && !rep.first_missing_edge) rep.first_missing_edge = e;
        if (rep.first_shared_edge && rep.first_missing_edge) break;
    }

    rep.pass = rep.structure_issues.empty() && rep.class_issues.empty() &&
               !rep.first_shared_edge && !rep.first_missing_edge;
    return rep;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << ": ";
    size_t total = 0;
    for (auto& [len, cnt] : length_histogram) total += cnt;
    os << total << (total == 1 ? " cycle" : " cycles") << ", lengths {";
    bool first = true;
    for (auto& [len, cnt] : length_histogram) {
        if (!first) os << ", ";
        first = false;
        os << len << "x" << cnt;
    }
    os << "}";
    if (!pass) {
        for (const auto& s : structure_issues) os << "\n  " << s;
        for (const auto& ci : class_issues)
            os << "\n  class " << ci.class_index << ": " << ci.what;
        if (first_shared_edge)
            os << "\n  shared edge: " << to_string(*first_shared_edge);
        if (first_missing_edge)
            os << "\n  missing edge: " << to_string(*first_missing_edge);
    }
    return os.str();
}

CycleWalk canonical_walk(const CycleWalk& w) {
    const int len = static_cast<int>(w.verts.size());
    if (len < 3) return w;
    int start = 0;
    for (int p = 1; p < len; ++p) {
        if (w.verts[p] < w.verts[start]) start = p;
    }
    Vertex next = w.verts[(start + 1) % len];
    Vertex prev = w.verts[(start + len - 1) % len];
    CycleWalk out;
    out.dims = w.dims;
    out.verts.reserve(len);
    if (next <= prev) {
        for (int p = 0; p < len; ++p) out.verts.push_back(w.verts[(start + p) % len]);
    } else {
        for (int p = 0; p < len; ++p)
            out.verts.push_back(w.verts[(start - p + len) % len]);
    }
    return out;
}

namespace {

// Sort key for a canonicalized class: its smallest canonical edge.  Walks
// with broken steps have no key and sort last (ties broken via vertices).
std::optional<Edge> smallest_edge(const CycleWalk& w) {
    std::optional<Edge> best;
    const size_t len = w.verts.size();
    if (len < 3) return best;
    for (size_t p = 0; p < len; ++p) {
        Edge e;
        if (!in_range(w.verts[p], w.dims) || !in_range(w.verts[(p + 1) % len], w.dims))
            continue;
        if (try_edge(w.verts[p], w.verts[(p + 1) % len], w.dims, e)) {
            if (!best || e < *best) best = e;
        }
    }
    return best;
}

} // namespace

Decomposition canonicalize(const Decomposition& d) {
    struct Entry {
        std::optional<Edge> key;
        CycleWalk walk;
        std::string label;
    };
    std::vector<Entry> entries;
    entries.reserve(d.classes.size());
    for (size_t k = 0; k < d.classes.size(); ++k) {
        CycleWalk cw = canonical_walk(d.classes[k]);
        entries.push_back({smallest_edge(cw), std::move(cw), d.label(k)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.key.has_value() != b.key.has_value()) return a.key.has_value();
        if (a.key) {
            if (*a.key < *b.key) return true;
            if (*b.key < *a.key) return false;
        }
        if (a.walk.verts != b.walk.verts) return a.walk.verts < b.walk.verts;
        return a.label < b.label;
    });
    Decomposition out;
    out.dims = d.dims;
    bool any_label = false;
    for (auto& e : entries) {
        out.classes.push_back(std::move(e.walk));
        any_label = any_label || !e.label.empty();
    }
    if (any_label) {
        for (auto& e : entries) out.labels.push_back(e.label);
    }
    return out;
}

bool equivalent(const Decomposition& a, const Decomposition& b) {
    if (a.dims != b.dims) return false;
    Decomposition ca = canonicalize(a);
    Decomposition cb = canonicalize(b);
    if (ca.classes.size() != cb.classes.size()) return false;
    for (size_t k = 0; k < ca.classes.size(); ++k) {
        if (ca.classes[k].verts != cb.classes[k].verts) return false;
        if (ca.label(k) != cb.label(k)) return false;
    }
    return true;
}

CycleWalk trace_cycle(const std::vector<Edge>& edges, TorusDims d) {
    if (edges.size() < 3) {
        throw StructuralError("cannot trace a cycle from " +
                              std::to_string(edges.size()) + " edges");
    }
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& [v, nbrs] : adj) {
        if (nbrs.size() != 2) {
            throw StructuralError("vertex " + to_string(v) + " has degree " +
                                  std::to_string(nbrs.size()) +
                                  " in a would-be cycle");
        }
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs[0] == nbrs[1]) {
            throw StructuralError("duplicate edge at vertex " + to_string(v));
        }
    }
    Vertex start = adj.begin()->first;
    CycleWalk w;
    w.dims = d;
    w.verts.reserve(edges.size());
    Vertex prev = start;
    Vertex cur = adj[start][0]; // smaller neighbor first: canonical orientation
    w.verts.push_back(start);
    while (cur != start) {
        w.verts.push_back(cur);
        const auto& nbrs = adj[cur];
        Vertex nxt = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = nxt;
    }
    if (w.verts.size() != edges.size()) {
        throw StructuralError(
            "edge set is not a single cycle: walk through " + to_string(start) +
            " closed after " + std::to_string(w.verts.size()) + " of " +
            std::to_string(edges.size()) + " edges");
    }
    return w;
}

Decomposition transpose(const Decomposition& d) {
    Decomposition out;
    out.dims = TorusDims{d.dims.n, d.dims.m};
    out.labels = d.labels;
    out.classes.reserve(d.classes.size());
    for (const CycleWalk& w : d.classes) {
        CycleWalk t;
        t.dims = out.dims;
        t.verts.reserve(w.verts.size());
        for (Vertex v : w.verts) t.verts.push_back(Vertex{v.j, v.i});
        out.classes.push_back(std::move(t));
    }
    return out;
}

} // namespace cycdec
