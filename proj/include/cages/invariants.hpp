#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cages/graph.hpp"

namespace cages {

/// Parameter triple of an (r, g, chi)-graph: r-regular, girth g, chromatic
/// number chi; `equitable` additionally asks for a chi-coloring whose class
/// sizes differ by at most one.
struct CageParams {
    int r = 2;
    int g = 3;
    int chi = 2;
    bool equitable = false;

    void validate() const {
        if (r < 2) throw std::invalid_argument("degree r must be >= 2");
        if (g < 3) throw std::invalid_argument("girth g must be >= 3");
        if (chi < 2) throw std::invalid_argument("chromatic number must be >= 2");
        if (chi > r + 1) throw std::invalid_argument("no r-regular graph has chromatic number above r+1");
    }
};

/// Degree r when the graph is r-regular, nullopt otherwise. The empty graph
/// is vacuously 0-regular.
inline std::optional<int> regularity(const Graph& g) {
    if (g.order() == 0) return 0;
    const int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

/// Girth with a witness. `length` is empty for forests (a distinct
/// "acyclic" outcome, deliberately not 0 or a large number); otherwise
/// `cycle` lists the vertices of one shortest cycle in order.
struct GirthResult {
    std::optional<int> length;
    std::vector<int> cycle;

    bool acyclic() const { return !length.has_value(); }
};

namespace detail {

// Extracts the simple cycle determined by a BFS non-tree edge (u, w): walk
// the parent chains to their lowest common ancestor c and return
// u .. c .. w (closing edge wu implied). Passing through c != root is fine;
// the cycle is simple because the chains below c are disjoint.
inline std::vector<int> bfs_cycle_through(const std::vector<int>& parent, const std::vector<int>& dist, int u, int w) {
    std::vector<int> up_u{u}, up_w{w};
    int a = u, b = w;
    while (a != b) {
        if (dist[static_cast<std::size_t>(a)] >= dist[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            up_u.push_back(a);
        } else {
            b = parent[static_cast<std::size_t>(b)];
            up_w.push_back(b);
        }
    }
    // up_u = u..c, up_w = w..c; emit u..c then back down to w.
    std::vector<int> cycle(up_u.begin(), up_u.end());
    for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) cycle.push_back(*it);
    return cycle;
}

}  // namespace detail

/// Exact girth by BFS from every root: each non-tree edge closes a cycle,
/// whose simple form is extracted through the parent chains; the best over
/// all roots is the girth. A root on a shortest cycle always exhibits it.
inline GirthResult girth(const Graph& g) {
    const int n = g.order();
    GirthResult best;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::vector<int> frontier{root};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int u : frontier) {
                // Cap the search once no shorter cycle can close at this depth.
                if (best.length && 2 * dist[static_cast<std::size_t>(u)] >= *best.length) continue;
                for (int w : g.neighbors(u)) {
                    if (w == parent[static_cast<std::size_t>(u)]) continue;
                    if (dist[static_cast<std::size_t>(w)] >= 0) {
                        std::vector<int> cyc = detail::bfs_cycle_through(parent, dist, u, w);
                        const int len = static_cast<int>(cyc.size());
                        if (!best.length || len < *best.length) best = {len, std::move(cyc)};
                    } else {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                        parent[static_cast<std::size_t>(w)] = u;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
        if (best.length && *best.length == 3) break;
    }
    return best;
}

/// BFS two-sided split. When the graph is bipartite, `side` holds 0/1 per
/// vertex (isolated pieces land on side 0); otherwise `odd_cycle` is a
/// witness cycle of odd length.
struct BipartitionResult {
    std::optional<std::vector<int>> side;
    std::vector<int> odd_cycle;

    bool is_bipartite() const { return side.has_value(); }
};

inline BipartitionResult bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        dist[static_cast<std::size_t>(root)] = 0;
        std::vector<int> frontier{root};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int u : frontier) {
                for (int w : g.neighbors(u)) {
                    if (side[static_cast<std::size_t>(w)] == -1) {
                        side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                        parent[static_cast<std::size_t>(w)] = u;
                        next.push_back(w);
                    } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                        BipartitionResult out;
                        out.odd_cycle = detail::bfs_cycle_through(parent, dist, u, w);
                        return out;
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return {std::move(side), {}};
}

/// Moore bound n_0(r, g): the order of the breadth-first tree of radius
/// floor((g-1)/2) grown from a vertex (odd g) or an edge (even g).
inline std::int64_t moore_bound(int r, int g) {
    if (r < 2 || g < 3) throw std::invalid_argument("moore_bound needs r >= 2, g >= 3");
    std::int64_t total = 0;
    if (g % 2 == 1) {
        // 1 + r * sum_{i=0}^{(g-3)/2} (r-1)^i
        total = 1;
        std::int64_t pw = 1;
        for (int i = 0; i <= (g - 3) / 2; ++i) {
            total += static_cast<std::int64_t>(r) * pw;
            pw *= (r - 1);
        }
    } else {
        // 2 * sum_{i=0}^{(g-2)/2} (r-1)^i
        std::int64_t pw = 1;
        for (int i = 0; i <= (g - 2) / 2; ++i) {
            total += 2 * pw;
            pw *= (r - 1);
        }
    }
    return total;
}

struct Connectivity {
    bool connected = true;
    int components = 0;
};

/// Component count via BFS. The empty graph counts as connected with zero
/// components. Reported for information only; several constructions here
/// legitimately emit disconnected graphs.
inline Connectivity is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int comps = 0;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        ++comps;
        std::vector<int> stack{root};
        seen[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return {comps <= 1, comps};
}

/// Shortest cycle through vertex x, optionally avoiding a banned vertex.
/// BFS from x; only closures whose chains meet exactly at x count. Returns
/// the cycle starting at x, or nullopt if none exists.
inline std::optional<std::vector<int>> shortest_cycle_through(const Graph& g, int x, int banned = -1) {
    const int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(x)] = 0;
    std::vector<int> frontier{x};
    std::optional<std::vector<int>> best;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier) {
            if (best && 2 * dist[static_cast<std::size_t>(u)] >= static_cast<int>(best->size())) continue;
            for (int w : g.neighbors(u)) {
                if (w == banned || w == parent[static_cast<std::size_t>(u)]) continue;
                if (dist[static_cast<std::size_t>(w)] >= 0) {
                    std::vector<int> cyc = detail::bfs_cycle_through(parent, dist, u, w);
                    // accept only cycles through the root x
                    if (std::find(cyc.begin(), cyc.end(), x) == cyc.end()) continue;
                    if (!best || cyc.size() < best->size()) {
                        std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), x), cyc.end());
                        best = std::move(cyc);
                    }
                } else {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return best;
}

/// Length of a shortest cycle containing the edge e, i.e. 1 + dist(u, v)
/// in the graph with e removed; nullopt when e lies on no cycle.
inline std::optional<int> shortest_cycle_with_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("shortest_cycle_with_edge: edge not present");
    const int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(e.u)] = 0;
    std::vector<int> frontier{e.u};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int w : g.neighbors(u)) {
                if ((u == e.u && w == e.v) || (u == e.v && w == e.u)) continue;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    if (dist[static_cast<std::size_t>(e.v)] < 0) return std::nullopt;
    return dist[static_cast<std::size_t>(e.v)] + 1;
}

}  // namespace cages
