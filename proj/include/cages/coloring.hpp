#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cages/graph.hpp"
#include "cages/invariants.hpp"

namespace cages {

/// Total assignment of vertices to color classes 0..k-1, with a class-size
/// census kept consistent with the assignment.
struct Coloring {
    std::vector<int> assignment;
    int k = 0;
    std::vector<int> census;

    static Coloring from_assignment(std::vector<int> a, int k) {
        if (k < 0) throw std::invalid_argument("negative class count");
        Coloring c;
        c.k = k;
        c.census.assign(static_cast<std::size_t>(k), 0);
        for (int x : a) {
            if (x < 0 || x >= k) throw std::invalid_argument("color out of range");
            ++c.census[static_cast<std::size_t>(x)];
        }
        c.assignment = std::move(a);
        return c;
    }

    static Coloring from_classes(int n, int k, const std::vector<std::vector<int>>& classes) {
        if (static_cast<int>(classes.size()) > k) throw std::invalid_argument("more classes than k");
        std::vector<int> a(static_cast<std::size_t>(n), -1);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range in class list");
                if (a[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("vertex listed in two classes");
                a[static_cast<std::size_t>(v)] = static_cast<int>(c);
            }
        for (int x : a)
            if (x == -1) throw std::invalid_argument("class lists do not cover all vertices");
        return from_assignment(std::move(a), k);
    }

    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
        for (std::size_t v = 0; v < assignment.size(); ++v)
            out[static_cast<std::size_t>(assignment[v])].push_back(static_cast<int>(v));
        return out;
    }

    /// Largest minus smallest class size; an equitable coloring has spread <= 1.
    int spread() const {
        if (k == 0) return 0;
        const auto [lo, hi] = std::minmax_element(census.begin(), census.end());
        return *hi - *lo;
    }

    bool is_equitable() const { return spread() <= 1; }
};

/// True iff no edge joins two vertices of the same class. Throws when the
/// assignment length does not match the graph order.
inline bool verify_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.order())
        throw std::invalid_argument("coloring length does not match graph order");
    for (const Edge& e : g.edges())
        if (c.assignment[static_cast<std::size_t>(e.u)] == c.assignment[static_cast<std::size_t>(e.v)]) return false;
    return true;
}

struct SearchStats {
    std::uint64_t nodes = 0;
};

namespace detail {

// Shared state for the exact coloring searches: DSATUR-style dynamic vertex
// order with fixed tie-breaking (saturation desc, degree desc, id asc), and
// per-vertex neighbor color counts maintained incrementally.
class ColorSearch {
public:
    ColorSearch(const Graph& g, int k) : g_(g), n_(g.order()), k_(k),
        color_(static_cast<std::size_t>(n_), -1),
        ncol_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k), 0),
        sat_(static_cast<std::size_t>(n_), 0) {}

    int pick() const {
        int best = -1, bsat = -1, bdeg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != -1) continue;
            const int s = sat_[static_cast<std::size_t>(v)], d = g_.degree(v);
            if (s > bsat || (s == bsat && (d > bdeg))) {
                best = v;
                bsat = s;
                bdeg = d;
            }
        }
        return best;
    }

    bool color_free(int v, int c) const {
        return ncol_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] == 0;
    }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        for (int w : g_.neighbors(v)) {
            auto& cnt = ncol_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
            if (cnt++ == 0) ++sat_[static_cast<std::size_t>(w)];
        }
    }

    void unassign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = -1;
        for (int w : g_.neighbors(v)) {
            auto& cnt = ncol_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
            if (--cnt == 0) --sat_[static_cast<std::size_t>(w)];
        }
    }

    int color_of(int v) const { return color_[static_cast<std::size_t>(v)]; }
    std::vector<int> take_assignment() { return std::move(color_); }

protected:
    const Graph& g_;
    int n_;
    int k_;
    std::vector<int> color_;
    std::vector<int> ncol_;
    std::vector<int> sat_;
};

}  // namespace detail

/// Exhaustive proper k-coloring search. Backtracking over a DSATUR vertex
/// order; color symmetry is broken by letting a node use only classes already
/// in use plus the single next unused index (so the first vertex lands in
/// class 0 and classes open in index order).
inline std::optional<Coloring> exists_k_coloring(const Graph& g, int k, SearchStats* stats = nullptr) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const int n = g.order();
    if (n == 0) return Coloring::from_assignment({}, k);

    struct Search : detail::ColorSearch {
        using detail::ColorSearch::ColorSearch;
        std::uint64_t nodes = 0;
        int open = 0;

        bool run(int depth) {
            if (depth == n_) return true;
            const int v = pick();
            const int limit = std::min(open + 1, k_);
            for (int c = 0; c < limit; ++c) {
                if (!color_free(v, c)) continue;
                ++nodes;
                assign(v, c);
                const bool opened = (c == open);
                if (opened) ++open;
                if (run(depth + 1)) return true;
                if (opened) --open;
                unassign(v, c);
            }
            return false;
        }
    };

    Search s(g, k);
    const bool found = s.run(0);
    if (stats != nullptr) stats->nodes = s.nodes;
    if (!found) return std::nullopt;
    return Coloring::from_assignment(s.take_assignment(), k);
}

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

namespace detail {

// Greedy clique by descending degree; a cheap lower bound for chi.
inline int greedy_clique_bound(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace detail

/// Exact chromatic number: smallest k admitting a proper k-coloring, searched
/// upward from a greedy clique lower bound, with the witness coloring.
inline ChromaticResult chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {0, Coloring::from_assignment({}, 0)};
    if (g.edge_count() == 0)
        return {1, Coloring::from_assignment(std::vector<int>(static_cast<std::size_t>(n), 0), 1)};
    int k = std::max(2, detail::greedy_clique_bound(g));
    for (;; ++k) {
        if (auto c = exists_k_coloring(g, k)) return {k, std::move(*c)};
        if (k > n) throw std::logic_error("chromatic search exceeded order");
    }
}

/// Outcome of the equitable search: a witness coloring whose class sizes
/// differ by at most one, or a certificate that the whole (symmetry-reduced)
/// space was explored, with the node count either way.
struct EquitableWitness {
    std::optional<Coloring> coloring;
    std::uint64_t nodes_explored = 0;

    bool exhausted() const { return !coloring.has_value(); }
};

/// Exhaustive search for an equitable k-coloring. Only the balanced census
/// is feasible -- ceil(n/k) repeated (n mod k) times, floor(n/k) otherwise --
/// so classes carry exactly those capacities. Pruning: a class at capacity is
/// closed; a node fails as soon as any uncolored vertex has no usable class.
/// Symmetry: classes of equal capacity are interchangeable, so an empty class
/// may be used only if it is the first empty one of its capacity.
inline EquitableWitness exists_equitable_k_coloring(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const int n = g.order();
    if (n == 0) return {Coloring::from_assignment({}, k), 0};

    struct Search : detail::ColorSearch {
        Search(const Graph& g, int k) : detail::ColorSearch(g, k) {}
        std::vector<int> cap;
        std::vector<int> used;
        std::uint64_t nodes = 0;

        bool usable(int v, int c) const {
            if (used[static_cast<std::size_t>(c)] >= cap[static_cast<std::size_t>(c)]) return false;
            if (!color_free(v, c)) return false;
            if (used[static_cast<std::size_t>(c)] == 0) {
                for (int d = 0; d < c; ++d)
                    if (cap[static_cast<std::size_t>(d)] == cap[static_cast<std::size_t>(c)] &&
                        used[static_cast<std::size_t>(d)] == 0)
                        return false;  // an earlier empty class of this capacity stands in for it
            }
            return true;
        }

        bool has_usable(int v) const {
            for (int c = 0; c < k_; ++c)
                if (usable(v, c)) return true;
            return false;
        }

        bool run(int depth) {
            if (depth == n_) return true;
            for (int v = 0; v < n_; ++v)
                if (color_[static_cast<std::size_t>(v)] == -1 && !has_usable(v)) return false;
            const int v = pick();
            for (int c = 0; c < k_; ++c) {
                if (!usable(v, c)) continue;
                ++nodes;
                assign(v, c);
                ++used[static_cast<std::size_t>(c)];
                if (run(depth + 1)) return true;
                --used[static_cast<std::size_t>(c)];
                unassign(v, c);
            }
            return false;
        }
    };

    Search s(g, k);
    const int big = (n + k - 1) / k, nbig = n % k;
    s.cap.assign(static_cast<std::size_t>(k), n / k);
    for (int c = 0; c < nbig; ++c) s.cap[static_cast<std::size_t>(c)] = big;
    s.used.assign(static_cast<std::size_t>(k), 0);

    const bool found = s.run(0);
    if (!found) return {std::nullopt, s.nodes};
    return {Coloring::from_assignment(s.take_assignment(), k), s.nodes};
}

/// Recolors through an old-id -> new-id map (-1 marks removed vertices), as
/// produced by vertex deletion or identification. Identified vertices must
/// agree on their class; every new vertex must be covered.
inline Coloring transport_coloring(const Coloring& c, std::span<const int> old_to_new, int n_new) {
    if (old_to_new.size() != c.assignment.size())
        throw std::invalid_argument("transport_coloring: mapping length mismatch");
    std::vector<int> a(static_cast<std::size_t>(n_new), -1);
    for (std::size_t v = 0; v < old_to_new.size(); ++v) {
        const int m = old_to_new[v];
        if (m < 0) continue;
        if (m >= n_new) throw std::invalid_argument("transport_coloring: mapped id out of range");
        if (a[static_cast<std::size_t>(m)] != -1 && a[static_cast<std::size_t>(m)] != c.assignment[v])
            throw std::invalid_argument("transport_coloring: mapping merges vertices of different colors");
        a[static_cast<std::size_t>(m)] = c.assignment[v];
    }
    for (int x : a)
        if (x == -1) throw std::invalid_argument("transport_coloring: mapping incomplete");
    return Coloring::from_assignment(std::move(a), c.k);
}

}  // namespace cages
