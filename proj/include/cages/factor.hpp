#pragma once

#include <optional>
#include <vector>

#include "cages/graph.hpp"
#include "cages/invariants.hpp"

namespace cages {

/// A set of pairwise vertex-disjoint edges.
struct Matching {
    std::vector<Edge> edges;

    bool vertex_disjoint() const {
        std::vector<int> ends;
        for (const Edge& e : edges) {
            ends.push_back(e.u);
            ends.push_back(e.v);
        }
        std::sort(ends.begin(), ends.end());
        return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
    }

    /// Perfect on a graph of order n: covers every vertex exactly once.
    bool is_perfect(int n) const { return vertex_disjoint() && static_cast<int>(edges.size()) * 2 == n; }
};

/// Backtracking search for a perfect matching that uses no forbidden edge.
/// The lowest-id unmatched vertex is matched first, candidates in neighbor
/// order, and a branch is cut as soon as some unmatched vertex has no
/// available partner. Deterministic: the same matching comes back every run.
inline std::optional<Matching> perfect_matching_avoiding(const Graph& g, std::span<const Edge> forbidden) {
    const int n = g.order();
    if (n % 2 != 0) return std::nullopt;
    if (n == 0) return Matching{};

    std::vector<Edge> forb(forbidden.begin(), forbidden.end());
    std::sort(forb.begin(), forb.end());
    auto is_forbidden = [&](int a, int b) { return std::binary_search(forb.begin(), forb.end(), Edge(a, b)); };

    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<Edge> chosen;

    auto has_candidate = [&](int v) {
        for (int w : g.neighbors(v))
            if (mate[static_cast<std::size_t>(w)] == -1 && !is_forbidden(v, w)) return true;
        return false;
    };

    auto rec = [&](auto&& self, int matched) -> bool {
        if (matched == n) return true;
        for (int v = 0; v < n; ++v)
            if (mate[static_cast<std::size_t>(v)] == -1 && !has_candidate(v)) return false;
        int u = 0;
        while (mate[static_cast<std::size_t>(u)] != -1) ++u;
        for (int w : g.neighbors(u)) {
            if (mate[static_cast<std::size_t>(w)] != -1 || is_forbidden(u, w)) continue;
            mate[static_cast<std::size_t>(u)] = w;
            mate[static_cast<std::size_t>(w)] = u;
            chosen.emplace_back(u, w);
            if (self(self, matched + 2)) return true;
            chosen.pop_back();
            mate[static_cast<std::size_t>(u)] = -1;
            mate[static_cast<std::size_t>(w)] = -1;
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;
    return Matching{std::move(chosen)};
}

inline std::optional<Matching> perfect_matching_avoiding(const Graph& g, std::initializer_list<Edge> forbidden) {
    return perfect_matching_avoiding(g, std::span<const Edge>(forbidden.begin(), forbidden.size()));
}

/// A Hamiltonian cycle as its cyclic vertex sequence.
struct HamCycle {
    std::vector<int> vertices;
};

/// Exact Hamiltonian cycle search for bipartite graphs. The input must be
/// bipartite (checked; anything else is a usage error); unequal sides make a
/// Hamiltonian cycle impossible, so that case is an immediate nullopt.
/// Intended for the dense balanced graphs where a minimum-degree bound
/// already guarantees a cycle, but works on any bipartite input.
inline std::optional<HamCycle> hamiltonian_cycle_bipartite(const Graph& g) {
    const int n = g.order();
    const BipartitionResult bip = bipartition(g);
    if (!bip.is_bipartite()) throw std::invalid_argument("hamiltonian_cycle_bipartite: graph is not bipartite");
    if (n < 4 || n % 2 != 0) return std::nullopt;
    int side0 = 0;
    for (int v = 0; v < n; ++v)
        if ((*bip.side)[static_cast<std::size_t>(v)] == 0) ++side0;
    if (side0 * 2 != n) return std::nullopt;
    if (!is_connected(g).connected) return std::nullopt;

    std::vector<int> path{0};
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    on_path[0] = 1;

    // Degree pruning: every off-path vertex still needs two cycle edges among
    // off-path vertices, the path's tail, and the start.
    auto feasible = [&]() {
        const int tail = path.back();
        for (int v = 0; v < n; ++v) {
            if (on_path[static_cast<std::size_t>(v)]) continue;
            int avail = 0;
            for (int w : g.neighbors(v))
                if (!on_path[static_cast<std::size_t>(w)] || w == tail || w == 0) ++avail;
            if (avail < 2) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == n) return g.has_edge(path.back(), 0);
        if (!feasible()) return false;
        const int u = path.back();
        for (int w : g.neighbors(u)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = 1;
            if (self(self)) return true;
            on_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
        return false;
    };

    if (!rec(rec)) return std::nullopt;
    return HamCycle{std::move(path)};
}

/// An even cycle splits into its two alternating perfect matchings (of the
/// cycle's vertex set). Returns the one avoiding the given edge; when the
/// edge is not on the cycle at all, the even-position matching is returned.
inline Matching one_factor_from_cycle(const HamCycle& c, Edge avoid) {
    const int len = static_cast<int>(c.vertices.size());
    if (len < 4 || len % 2 != 0) throw std::invalid_argument("one_factor_from_cycle: cycle length must be even");
    Matching even_m, odd_m;
    bool avoid_in_even = false;
    for (int i = 0; i < len; ++i) {
        const Edge e(c.vertices[static_cast<std::size_t>(i)], c.vertices[static_cast<std::size_t>((i + 1) % len)]);
        if (i % 2 == 0) {
            even_m.edges.push_back(e);
            if (e == avoid) avoid_in_even = true;
        } else {
            odd_m.edges.push_back(e);
        }
    }
    return avoid_in_even ? odd_m : even_m;
}

}  // namespace cages
