#pragma once

// Test-only oracles: independent recomputation routes for the quantities the
// library computes, kept deliberately naive and separate from the library's
// algorithms so agreement is meaningful evidence.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "cages/graph.hpp"

namespace oracles {

using cages::Edge;
using cages::Graph;

// Girth by iterative-deepening DFS over simple cycles: a cycle is counted at
// its minimum vertex; depth grows until the first length with a hit. This is
// plain cycle enumeration, not the per-root BFS closure route the library uses.
inline std::optional<int> girth_by_cycle_enumeration(const Graph& g) {
    const int n = g.order();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;

    auto dfs = [&](auto&& self, int start, int v, int limit) -> bool {
        if (static_cast<int>(path.size()) >= 3 && g.has_edge(v, start)) return true;
        if (static_cast<int>(path.size()) == limit) return false;
        for (int w : g.neighbors(v)) {
            if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (self(self, start, w, limit)) return true;
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };

    for (int limit = 3; limit <= n; ++limit) {
        for (int s = 0; s < n; ++s) {
            std::fill(on_path.begin(), on_path.end(), 0);
            path.assign(1, s);
            on_path[static_cast<std::size_t>(s)] = 1;
            if (dfs(dfs, s, s, limit)) return limit;
        }
    }
    return std::nullopt;
}

// True iff some simple cycle of odd length exists (same DFS route).
inline bool has_odd_cycle_by_enumeration(const Graph& g) {
    const int n = g.order();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    bool found = false;

    auto dfs = [&](auto&& self, int start, int v) -> void {
        if (found) return;
        if (static_cast<int>(path.size()) >= 3 && path.size() % 2 == 1 && g.has_edge(v, start)) {
            found = true;
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };

    for (int s = 0; s < n && !found; ++s) {
        std::fill(on_path.begin(), on_path.end(), 0);
        path.assign(1, s);
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(dfs, s, s);
    }
    return found;
}

// Plain k-colorability: vertices in id order, all k colors tried, no
// ordering heuristics and no symmetry breaking.
inline bool k_colorable_plain(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> col(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && col[static_cast<std::size_t>(w)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1)) return true;
            col[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int chromatic_by_plain_enumeration(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k)
        if (k_colorable_plain(g, k)) return k;
}

// All perfect matchings avoiding a forbidden set, by recursion over the edge
// list (lowest edge index first), collected whole.
inline std::vector<std::vector<Edge>> all_perfect_matchings(const Graph& g, const std::vector<Edge>& forbidden) {
    const int n = g.order();
    std::vector<std::vector<Edge>> out;
    if (n % 2 != 0) return out;
    std::vector<Edge> allowed;
    for (const Edge& e : g.edges())
        if (std::find(forbidden.begin(), forbidden.end(), e) == forbidden.end()) allowed.push_back(e);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Edge> current;

    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(current.size()) * 2 == n) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < allowed.size(); ++i) {
            const Edge& e = allowed[i];
            if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) continue;
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
            current.push_back(e);
            self(self, i + 1);
            current.pop_back();
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

// Moore bound by literally growing the breadth tree level by level, from a
// vertex for odd girth and from an edge for even girth.
inline long long moore_by_tree_counting(int r, int g) {
    long long total = 0, level;
    int depth;
    if (g % 2 == 1) {
        depth = (g - 1) / 2;
        total = 1;
        level = r;
        for (int i = 1; i <= depth; ++i) {
            total += level;
            level *= (r - 1);
        }
    } else {
        depth = (g - 2) / 2;
        total = 2;
        level = 2 * (r - 1);
        for (int i = 1; i <= depth; ++i) {
            total += level;
            level *= (r - 1);
        }
    }
    return total;
}

// --------------------------------------------------------------------------
// Deterministic random corpus builders.
// --------------------------------------------------------------------------

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// Pairing-model r-regular graph; re-draws until simple. Callers keep n*r
// even and n > r.
inline Graph random_regular(std::mt19937& rng, int n, int r) {
    for (;;) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(r), v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        bool ok = true;
        std::vector<std::vector<char>> seen(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            const int a = stubs[i], b = stubs[i + 1];
            if (a == b || seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) ok = false;
            else {
                seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
                seen[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
                edges.emplace_back(a, b);
            }
        }
        if (ok) return Graph::from_edge_list(n, edges);
    }
}

// Random balanced bipartite graph with both sides of the given size and
// minimum degree > side/2 (repaired by adding missing cross edges at
// deficient vertices), the regime where a Hamiltonian cycle is guaranteed.
inline Graph random_moon_moser(std::mt19937& rng, int side, double p) {
    const int n = 2 * side;
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < side; ++u)
        for (int v = side; v < n; ++v)
            if (coin(rng)) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < side; ++u)
        for (int v = side; v < n; ++v)
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
            }
    const int need = side / 2 + 1;
    std::uniform_int_distribution<int> pick(0, side - 1);
    for (int v = 0; v < n; ++v) {
        while (deg[static_cast<std::size_t>(v)] < need) {
            const int other = v < side ? side + pick(rng) : pick(rng);
            const int u = std::min(v, other), w = std::max(v, other);
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) continue;
            adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = 1;
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(w)];
        }
    }
    std::vector<Edge> edges;
    for (int u = 0; u < side; ++u)
        for (int v = side; v < n; ++v)
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

}  // namespace oracles
