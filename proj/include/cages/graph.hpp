#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cages {

/// Thrown when a machine-checked postcondition fails (a construction or a
/// bundled data set does not have the properties it claims).
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge, normalized so that u < v. Loops are rejected.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertex ids 0..n-1 with sorted
/// adjacency lists. Graphs are values: every operation below returns a new
/// graph, so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph with exactly the given edges; duplicates collapse.
    /// Throws if an endpoint is out of [0, n).
    static Graph from_edge_list(int n, std::span<const Edge> edges) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const Edge& e : edges) {
            if (e.v >= n) throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range, n=" + std::to_string(n));
            g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            g.m_ += nb.size();
        }
        g.m_ /= 2;
        return g;
    }

    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    static Graph from_edge_list(int n, const std::vector<Edge>& edges) {
        return from_edge_list(n, std::span<const Edge>(edges));
    }

    int order() const { return n_; }
    std::size_t edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

    std::span<const int> neighbors(int v) const {
        const auto& nb = adj_.at(static_cast<std::size_t>(v));
        return {nb.data(), nb.size()};
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// All edges, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int w : adj_[static_cast<std::size_t>(u)])
                if (u < w) out.emplace_back(u, w);
        return out;
    }

    /// Structural soundness: neighbor ids in range, lists sorted and
    /// duplicate-free, no loops, adjacency symmetric.
    bool invariants_hold() const {
        if (adj_.size() != static_cast<std::size_t>(n_)) return false;
        for (int u = 0; u < n_; ++u) {
            const auto& nb = adj_[static_cast<std::size_t>(u)];
            if (!std::is_sorted(nb.begin(), nb.end())) return false;
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
            for (int w : nb) {
                if (w < 0 || w >= n_ || w == u) return false;
                if (!has_edge(w, u)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Ordered part sizes for a complete multipartite graph: at least two parts,
/// every part nonempty.
struct PartSizes {
    std::vector<int> sizes;

    explicit PartSizes(std::vector<int> s) : sizes(std::move(s)) {
        if (sizes.size() < 2) throw std::invalid_argument("need at least two parts");
        for (int x : sizes)
            if (x < 1) throw std::invalid_argument("part sizes must be positive");
    }

    int total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

    /// Part index per vertex; vertices are grouped by part in id order.
    std::vector<int> part_of() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(total()));
        for (std::size_t p = 0; p < sizes.size(); ++p)
            out.insert(out.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
        return out;
    }
};

/// Complete multipartite graph: uv is an edge iff u and v lie in different parts.
inline Graph complete_multipartite(const PartSizes& parts) {
    const int n = parts.total();
    const std::vector<int> part = parts.part_of();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

/// Removes the given edges; every edge must be present.
inline Graph remove_edges(const Graph& g, std::span<const Edge> to_remove) {
    for (const Edge& e : to_remove)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("remove_edges: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
    std::vector<Edge> removed(to_remove.begin(), to_remove.end());
    std::sort(removed.begin(), removed.end());
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
    return Graph::from_edge_list(g.order(), kept);
}

inline Graph remove_edges(const Graph& g, std::initializer_list<Edge> to_remove) {
    return remove_edges(g, std::span<const Edge>(to_remove.begin(), to_remove.size()));
}

/// Adds new edges. A duplicate is an error, not a no-op: the surgery
/// constructions rely on added edges being new, and a collision means their
/// girth preconditions were violated.
inline Graph add_edges(const Graph& g, std::span<const Edge> to_add) {
    std::vector<Edge> all = g.edges();
    std::vector<Edge> added;
    for (const Edge& e : to_add) {
        if (e.v >= g.order()) throw std::invalid_argument("add_edges: endpoint out of range");
        if (g.has_edge(e.u, e.v) || std::find(added.begin(), added.end(), e) != added.end())
            throw std::invalid_argument("add_edges: duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        added.push_back(e);
        all.push_back(e);
    }
    return Graph::from_edge_list(g.order(), all);
}

inline Graph add_edges(const Graph& g, std::initializer_list<Edge> to_add) {
    return add_edges(g, std::span<const Edge>(to_add.begin(), to_add.size()));
}

/// Result of an operation that relabels vertices: the new graph plus the
/// old-id -> new-id map (-1 for vertices that were removed or, after an
/// identification, the map sends every group member to the merged id).
struct Relabeled {
    Graph graph;
    std::vector<int> old_to_new;
};

/// Induced subgraph on the complement of vs, with compact relabeling.
inline Relabeled delete_vertices(const Graph& g, std::span<const int> vs) {
    const int n = g.order();
    std::vector<char> del(static_cast<std::size_t>(n), 0);
    for (int v : vs) {
        if (v < 0 || v >= n) throw std::invalid_argument("delete_vertices: vertex out of range");
        del[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!del[static_cast<std::size_t>(v)]) map[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = map[static_cast<std::size_t>(e.u)], b = map[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return {Graph::from_edge_list(next, edges), std::move(map)};
}

inline Relabeled delete_vertices(const Graph& g, std::initializer_list<int> vs) {
    return delete_vertices(g, std::span<const int>(vs.begin(), vs.size()));
}

/// Replaces edge e = xy by a path x-z-y through a fresh vertex z = old n.
struct Subdivided {
    Graph graph;
    int new_vertex;
};

inline Subdivided subdivide_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("subdivide_edge: edge not present");
    const int z = g.order();
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (f != e) edges.push_back(f);
    edges.emplace_back(e.u, z);
    edges.emplace_back(e.v, z);
    return {Graph::from_edge_list(g.order() + 1, edges), z};
}

/// Disjoint union; offsets[i] is the id shift applied to gs[i], so colorings
/// can be transported copy by copy.
struct DisjointUnion {
    Graph graph;
    std::vector<int> offsets;
};

inline DisjointUnion disjoint_union(std::span<const Graph> gs) {
    std::vector<int> offsets;
    int n = 0;
    std::vector<Edge> edges;
    for (const Graph& g : gs) {
        offsets.push_back(n);
        for (const Edge& e : g.edges()) edges.emplace_back(e.u + n, e.v + n);
        n += g.order();
    }
    return {Graph::from_edge_list(n, edges), std::move(offsets)};
}

inline DisjointUnion disjoint_union(const std::vector<Graph>& gs) {
    return disjoint_union(std::span<const Graph>(gs));
}

/// Merges a set of vertices into one, which inherits the union of their
/// neighborhoods; remaining ids are compacted. Group members must be pairwise
/// non-adjacent with pairwise disjoint neighborhoods (otherwise the merge
/// would need loops or parallel edges).
inline Relabeled identify_vertices(const Graph& g, std::span<const int> group) {
    const int n = g.order();
    if (group.empty()) throw std::invalid_argument("identify_vertices: empty group");
    std::vector<int> grp(group.begin(), group.end());
    std::sort(grp.begin(), grp.end());
    grp.erase(std::unique(grp.begin(), grp.end()), grp.end());
    for (int v : grp)
        if (v < 0 || v >= n) throw std::invalid_argument("identify_vertices: vertex out of range");
    std::vector<char> in_group(static_cast<std::size_t>(n), 0);
    for (int v : grp) in_group[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : grp) {
        for (int w : g.neighbors(v)) {
            if (in_group[static_cast<std::size_t>(w)])
                throw std::invalid_argument("identify_vertices: group members are adjacent");
            if (seen[static_cast<std::size_t>(w)])
                throw std::invalid_argument("identify_vertices: group neighborhoods overlap");
            seen[static_cast<std::size_t>(w)] = 1;
        }
    }
    const int target = grp.front();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (in_group[static_cast<std::size_t>(v)] && v != target) continue;
        map[static_cast<std::size_t>(v)] = next++;
    }
    for (int v : grp) map[static_cast<std::size_t>(v)] = map[static_cast<std::size_t>(target)];
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    return {Graph::from_edge_list(next, edges), std::move(map)};
}

inline Relabeled identify_vertices(const Graph& g, std::initializer_list<int> group) {
    return identify_vertices(g, std::span<const int>(group.begin(), group.size()));
}

}  // namespace cages
