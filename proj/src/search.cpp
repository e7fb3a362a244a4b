#include "cycdec/search.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <vector>

#include "cycdec/errors.hpp"
#include "cycdec/wrapping.hpp"

namespace cycdec {

namespace {

int torus_dist(int a, int b, TorusDims d) {
    const int di = std::abs(a / d.n - b / d.n);
    const int dj = std::abs(a % d.n - b % d.n);
    return std::min(di, d.m - di) + std::min(dj, d.n - dj);
}

Vertex vertex_at(int id, TorusDims d) { return {id / d.n, id % d.n}; }

} // namespace

std::vector<CycleWalk> enumerate_cycles(TorusDims dims, int k,
                                        bool use_wrapping_filter) {
    require_dims(dims);
    std::vector<CycleWalk> out;
    const int V = dims.m * dims.n;
    if (k < 3 || k > V) return out;
    if (use_wrapping_filter && !wrapping_feasible(k, dims.m, dims.n))
        return out;

    // Neighbors sorted by vertex index, so depth-first traversal emits
    // vertex sequences in lexicographic order.
    std::vector<std::array<int, 4>> adj(V);
    for (int a = 0; a < V; ++a) {
        const Vertex v = vertex_at(a, dims);
        std::array<int, 4> nb{};
        const Vertex cands[4] = {reduce(v.i - 1, v.j, dims),
                                 reduce(v.i + 1, v.j, dims),
                                 reduce(v.i, v.j - 1, dims),
                                 reduce(v.i, v.j + 1, dims)};
        for (int t = 0; t < 4; ++t) nb[t] = cands[t].i * dims.n + cands[t].j;
        std::sort(nb.begin(), nb.end());
        adj[a] = nb;
    }

    // Parity of a path between two fixed vertices is an invariant only when
    // the torus is bipartite (both sides even).
    const bool bipartite = dims.m % 2 == 0 && dims.n % 2 == 0;

    std::vector<char> onpath(V, 0);
    std::vector<int> path;
    path.reserve(k);

    // Each cycle is generated exactly once: rooted at its smallest vertex,
    // in the orientation whose second vertex is smaller than its last.
    auto dfs = [&](auto&& self, int s) -> void {
        const int cur = path.back();
        const int p = static_cast<int>(path.size());
        if (p == k) {
            const bool closes =
                std::find(adj[cur].begin(), adj[cur].end(), s) != adj[cur].end();
            if (closes && path[1] < path[k - 1]) {
                CycleWalk w{dims, {}};
                w.verts.reserve(k);
                for (const int id : path) w.verts.push_back(vertex_at(id, dims));
                out.push_back(std::move(w));
            }
            return;
        }
        for (const int w : adj[cur]) {
            if (w <= s || onpath[w]) continue;
            const int dist = torus_dist(w, s, dims);
            const int remaining = k - p; // edges left after stepping to w
            if (dist > remaining) continue;
            if (bipartite && (remaining - dist) % 2 != 0) continue;
            onpath[w] = 1;
            path.push_back(w);
            self(self, s);
            path.pop_back();
            onpath[w] = 0;
        }
    };

    // A cycle needs k vertices at index s or above.
    for (int s = 0; s + k <= V; ++s) {
        onpath[s] = 1;
        path.push_back(s);
        dfs(dfs, s);
        path.pop_back();
        onpath[s] = 0;
    }
    return out;
}

SearchOutcome search(TorusDims dims, int k, const SearchConfig& cfg) {
    require_dims(dims);
    SearchOutcome out;
    const long long V = 1LL * dims.m * dims.n;
    const long long E = 2 * V;
    if (k < 3 || k > V || E % k != 0) {
        out.kind = SearchOutcome::Kind::ProvedImpossible;
        return out;
    }

    const auto cands = enumerate_cycles(dims, k, cfg.use_wrapping_filter);
    const int C = static_cast<int>(cands.size());
    const int EI = static_cast<int>(E);

    // Row c covers rows_flat[c*k .. c*k+k).
    std::vector<int> rows_flat(static_cast<size_t>(C) * k);
    for (int c = 0; c < C; ++c) {
        const auto edges = walk_edges(cands[c]);
        for (int t = 0; t < k; ++t)
            rows_flat[static_cast<size_t>(c) * k + t] =
                edge_index(edges[t], dims);
    }
    const auto row = [&](int c) { return rows_flat.data() + static_cast<size_t>(c) * k; };

    // Column -> candidate lists in CSR form, candidate ids ascending.
    std::vector<int> col_start(EI + 1, 0);
    for (const int e : rows_flat) ++col_start[e + 1];
    for (int e = 0; e < EI; ++e) col_start[e + 1] += col_start[e];
    std::vector<int> col_cands(rows_flat.size());
    {
        std::vector<int> fill(col_start.begin(), col_start.end() - 1);
        for (int c = 0; c < C; ++c)
            for (int t = 0; t < k; ++t) col_cands[fill[row(c)[t]]++] = c;
    }

    std::vector<int> blocked(C, 0); // covered edges touching the candidate
    std::vector<int> avail(EI, 0);  // unblocked candidates covering the edge
    std::vector<char> covered(EI, 0);
    for (int e = 0; e < EI; ++e) avail[e] = col_start[e + 1] - col_start[e];

    std::vector<int> trail;
    std::vector<int> chosen;
    int covered_cnt = 0;
    bool limited = false;
    out.nodes = 0;

    const auto block_hit = [&](int c2) {
        if (blocked[c2]++ == 0)
            for (int t = 0; t < k; ++t) --avail[row(c2)[t]];
        trail.push_back(c2);
    };
    const auto place = [&](int c) {
        for (int t = 0; t < k; ++t) {
            const int e = row(c)[t];
            covered[e] = 1;
            ++covered_cnt;
            for (int p = col_start[e]; p < col_start[e + 1]; ++p)
                block_hit(col_cands[p]);
        }
    };
    const auto unplace = [&](int c, size_t mark) {
        while (trail.size() > mark) {
            const int c2 = trail.back();
            trail.pop_back();
            if (--blocked[c2] == 0)
                for (int t = 0; t < k; ++t) ++avail[row(c2)[t]];
        }
        for (int t = 0; t < k; ++t) {
            covered[row(c)[t]] = 0;
            --covered_cnt;
        }
    };

    auto solve = [&](auto&& self) -> bool {
        if (covered_cnt == EI) return true;
        if (++out.nodes > cfg.node_limit) {
            limited = true;
            return false;
        }
        // Branch on the uncovered edge with the fewest live candidates.
        int best = -1, best_avail = INT_MAX;
        for (int e = 0; e < EI; ++e) {
            if (covered[e] || avail[e] >= best_avail) continue;
            best = e;
            best_avail = avail[e];
            if (best_avail == 0) break;
        }
        if (best_avail == 0) return false;
        for (int p = col_start[best]; p < col_start[best + 1]; ++p) {
            const int c = col_cands[p];
            if (blocked[c]) continue;
            const size_t mark = trail.size();
            place(c);
            chosen.push_back(c);
            if (self(self)) return true;
            chosen.pop_back();
            unplace(c, mark);
            if (limited) return false;
        }
        return false;
    };

    if (solve(solve)) {
        Decomposition d;
        d.dims = dims;
        for (const int c : chosen) d.classes.push_back(cands[c]);
        const auto rep = validate(d);
        if (!rep.pass)
            throw StructuralError("search assembled an invalid cover:\n" +
                                  rep.summary());
        out.kind = SearchOutcome::Kind::Found;
        out.decomposition = std::move(d);
    } else {
        out.kind = limited ? SearchOutcome::Kind::Inconclusive
                           : SearchOutcome::Kind::ProvedImpossible;
    }
    return out;
}

} // namespace cycdec
