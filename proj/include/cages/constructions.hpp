#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cages/coloring.hpp"
#include "cages/factor.hpp"
#include "cages/graph.hpp"
#include "cages/invariants.hpp"

namespace cages {

/// A constructed graph together with the coloring its recipe defines, the
/// parameters it claims, and a machine-readable log of the steps taken.
/// Every constructor re-verifies its own claims before returning and throws
/// verification_error instead of handing back an unverified graph.
struct ConstructionOutput {
    Graph graph;
    Coloring coloring;
    CageParams claimed;
    nlohmann::ordered_json provenance;
};

namespace detail {

// Exact chromatic verification is affordable up to this order; above it a
// claimed chi of 3 is certified by the witness coloring (upper bound) plus
// an odd-cycle witness (lower bound).
inline constexpr int kExactChiMaxOrder = 60;

inline void verify_construction(const ConstructionOutput& out) {
    const Graph& g = out.graph;
    const CageParams& want = out.claimed;

    const auto reg = regularity(g);
    if (!reg || *reg != want.r)
        throw verification_error("construction claims " + std::to_string(want.r) + "-regular, measured " +
                                 (reg ? std::to_string(*reg) : std::string("irregular")));
    const GirthResult gr = girth(g);
    if (gr.acyclic() || *gr.length != want.g)
        throw verification_error("construction claims girth " + std::to_string(want.g) + ", measured " +
                                 (gr.acyclic() ? std::string("acyclic") : std::to_string(*gr.length)));
    if (out.coloring.k != want.chi || !verify_coloring(g, out.coloring))
        throw verification_error("construction coloring is not a proper " + std::to_string(want.chi) + "-coloring");
    if (g.order() <= kExactChiMaxOrder) {
        const int chi = chromatic_number(g).chi;
        if (chi != want.chi)
            throw verification_error("construction claims chromatic number " + std::to_string(want.chi) +
                                     ", measured " + std::to_string(chi));
    } else {
        if (want.chi != 3) throw verification_error("only chi=3 claims are certifiable above the exact-chi cap");
        if (bipartition(g).is_bipartite())
            throw verification_error("construction claims chi=3 but the graph is bipartite");
    }
    if (want.equitable && out.coloring.spread() > 1)
        throw verification_error("construction claims an equitable coloring but the census spread exceeds 1");
}

inline Coloring two_coloring_checked(const Graph& g, const Coloring& f, const char* who) {
    if (f.k != 2) throw std::invalid_argument(std::string(who) + ": expected a 2-coloring");
    if (!verify_coloring(g, f)) throw std::invalid_argument(std::string(who) + ": the 2-coloring is not proper");
    return f;
}

}  // namespace detail

/// Which of the three minimum-order recipes applies for degree r.
enum class R33Case { even_r, odd_r_half_even, odd_r_half_odd };

inline R33Case r33_case_for(int r) {
    if (r % 2 == 0) return R33Case::even_r;
    return ((r + 1) / 2) % 2 == 0 ? R33Case::odd_r_half_even : R33Case::odd_r_half_odd;
}

/// Minimum order of an r-regular, girth-3, 3-chromatic graph:
///   r + r/2              for even r,
///   r + ceil(r/2) + 1    for odd r with ceil(r/2) even,
///   r + ceil(r/2) + 2    for odd r with ceil(r/2) odd.
inline int n_r33(int r) {
    if (r < 2) throw std::invalid_argument("n_r33 needs r >= 2");
    if (r % 2 == 0) return r + r / 2;
    const int half = (r + 1) / 2;
    return r + half + (half % 2 == 0 ? 1 : 2);
}

/// Builds a minimum-order (r, 3, 3)-graph with its 3-part coloring.
///   even r: the complete tripartite graph with parts of size r/2.
///   odd r, ceil(r/2) even: complete tripartite on parts ceil(r/2), which is
///     (r+1)-regular of even order, minus a perfect matching.
///   odd r, ceil(r/2) odd: parts (r+3)/2, (r+1)/2, (r+1)/2; fix a triangle
///     x,y,z across the parts; remove a perfect matching avoiding it; the
///     B+C side stays dense enough to be Hamiltonian, and one of the cycle's
///     two alternating 1-factors avoids yz -- removing it restores
///     r-regularity while the triangle survives.
inline ConstructionOutput r33_cage(int r) {
    const int want_n = n_r33(r);
    const R33Case which = r33_case_for(r);
    nlohmann::ordered_json prov;
    prov["operation"] = "r33_cage";
    prov["r"] = r;

    Graph graph;
    std::vector<int> part;
    if (which == R33Case::even_r) {
        const int m = r / 2;
        PartSizes parts({m, m, m});
        graph = complete_multipartite(parts);
        part = parts.part_of();
        prov["case"] = "even_r";
        prov["parts"] = {m, m, m};
    } else if (which == R33Case::odd_r_half_even) {
        const int m = (r + 1) / 2;
        PartSizes parts({m, m, m});
        const Graph base = complete_multipartite(parts);
        const auto matching = perfect_matching_avoiding(base, std::span<const Edge>{});
        if (!matching) throw verification_error("r33_cage: no perfect matching in the tripartite base");
        graph = remove_edges(base, matching->edges);
        part = parts.part_of();
        prov["case"] = "odd_r_half_even";
        prov["parts"] = {m, m, m};
        auto& rem = prov["removed_matching"] = nlohmann::ordered_json::array();
        for (const Edge& e : matching->edges) rem.push_back({e.u, e.v});
    } else {
        const int a = (r + 3) / 2, b = (r + 1) / 2;
        PartSizes parts({a, b, b});
        const Graph base = complete_multipartite(parts);
        part = parts.part_of();
        const int x = 0, y = a, z = a + b;  // lowest ids of the three parts
        const std::vector<Edge> triangle{Edge(x, y), Edge(y, z), Edge(x, z)};
        const auto matching = perfect_matching_avoiding(base, triangle);
        if (!matching) throw verification_error("r33_cage: no triangle-avoiding perfect matching");
        const Graph h = remove_edges(base, matching->edges);

        // F = subgraph induced on the two small parts, still balanced and dense.
        std::vector<int> bc;
        for (int v = a; v < base.order(); ++v) bc.push_back(v);
        std::vector<int> drop;
        for (int v = 0; v < a; ++v) drop.push_back(v);
        const Relabeled f_ind = delete_vertices(h, drop);
        const auto cycle = hamiltonian_cycle_bipartite(f_ind.graph);
        if (!cycle) throw verification_error("r33_cage: induced B+C subgraph is not hamiltonian");
        const Edge yz_in_f(f_ind.old_to_new[static_cast<std::size_t>(y)],
                           f_ind.old_to_new[static_cast<std::size_t>(z)]);
        const Matching alt = one_factor_from_cycle(*cycle, yz_in_f);

        std::vector<int> back(static_cast<std::size_t>(f_ind.graph.order()));
        for (int v = 0; v < h.order(); ++v)
            if (f_ind.old_to_new[static_cast<std::size_t>(v)] >= 0)
                back[static_cast<std::size_t>(f_ind.old_to_new[static_cast<std::size_t>(v)])] = v;
        std::vector<Edge> second;
        for (const Edge& e : alt.edges)
            second.emplace_back(back[static_cast<std::size_t>(e.u)], back[static_cast<std::size_t>(e.v)]);
        graph = remove_edges(h, second);

        prov["case"] = "odd_r_half_odd";
        prov["parts"] = {a, b, b};
        prov["triangle"] = {x, y, z};
        auto& rem1 = prov["removed_matching"] = nlohmann::ordered_json::array();
        for (const Edge& e : matching->edges) rem1.push_back({e.u, e.v});
        auto& rem2 = prov["removed_second_factor"] = nlohmann::ordered_json::array();
        for (const Edge& e : second) rem2.push_back({e.u, e.v});
    }

    ConstructionOutput out{std::move(graph), Coloring::from_assignment(std::move(part), 3),
                           CageParams{r, 3, 3, true}, std::move(prov)};
    out.provenance["order"] = out.graph.order();
    if (out.graph.order() != want_n)
        throw verification_error("r33_cage: order " + std::to_string(out.graph.order()) + ", expected " + std::to_string(want_n));
    detail::verify_construction(out);
    return out;
}

/// Odd-girth surgery at a vertex. Input: bipartite r-regular (r even >= 4)
/// with even girth >= 6 and its 2-coloring. Deletes a vertex x lying on a
/// shortest cycle, then re-joins its neighbors in pairs x1x2, x3x4, ... with
/// x1, x2 the two cycle neighbors, which turns one (g+1)-cycle into a
/// g-cycle. The second endpoint of every new pair moves to a third color
/// class. Output claims (r, input girth - 1, 3).
inline ConstructionOutput odd_from_even_vertex(const Graph& g, const Coloring& f) {
    const auto reg = regularity(g);
    if (!reg || *reg < 4 || *reg % 2 != 0)
        throw std::invalid_argument("odd_from_even_vertex: input must be r-regular with even r >= 4");
    const int r = *reg;
    detail::two_coloring_checked(g, f, "odd_from_even_vertex");
    const GirthResult gr = girth(g);
    if (gr.acyclic() || *gr.length % 2 != 0 || *gr.length < 6)
        throw std::invalid_argument("odd_from_even_vertex: input girth must be even and >= 6");
    const int girth_in = *gr.length;

    int x = -1;
    std::vector<int> cyc;
    for (int v = 0; v < g.order(); ++v) {
        auto c = shortest_cycle_through(g, v);
        if (c && static_cast<int>(c->size()) == girth_in) {
            x = v;
            cyc = std::move(*c);
            break;
        }
    }
    if (x < 0) throw std::invalid_argument("odd_from_even_vertex: no vertex on a shortest cycle");

    const int c1 = cyc[1], c2 = cyc.back();
    std::vector<int> order{std::min(c1, c2), std::max(c1, c2)};
    for (int w : g.neighbors(x))
        if (w != c1 && w != c2) order.push_back(w);

    const Relabeled del = delete_vertices(g, {x});
    std::vector<int> color(static_cast<std::size_t>(del.graph.order()));
    for (int v = 0; v < g.order(); ++v)
        if (del.old_to_new[static_cast<std::size_t>(v)] >= 0)
            color[static_cast<std::size_t>(del.old_to_new[static_cast<std::size_t>(v)])] =
                f.assignment[static_cast<std::size_t>(v)];
    std::vector<Edge> added;
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
        const int a = del.old_to_new[static_cast<std::size_t>(order[i])];
        const int b = del.old_to_new[static_cast<std::size_t>(order[i + 1])];
        added.emplace_back(a, b);
        color[static_cast<std::size_t>(b)] = 2;
    }
    const Graph h = add_edges(del.graph, added);

    nlohmann::ordered_json prov;
    prov["operation"] = "odd_from_even_vertex";
    prov["deleted_vertex"] = x;
    prov["neighbor_order"] = order;
    auto& ae = prov["added_edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : added) ae.push_back({e.u, e.v});
    prov["order"] = h.order();

    ConstructionOutput out{h, Coloring::from_assignment(std::move(color), 3),
                           CageParams{r, girth_in - 1, 3, false}, std::move(prov)};
    detail::verify_construction(out);
    return out;
}

/// Odd-girth surgery at an edge, for odd r (r = 3 included). Picks an edge
/// xy such that some shortest cycle runs through x but avoids y, deletes
/// both ends, and pairs up the leftover neighbors on each side; second
/// endpoints of new pairs move to the third class. Claims (r, girth-1, 3).
inline ConstructionOutput odd_from_even_edge(const Graph& g, const Coloring& f) {
    const auto reg = regularity(g);
    if (!reg || *reg < 3 || *reg % 2 != 1)
        throw std::invalid_argument("odd_from_even_edge: input must be r-regular with odd r >= 3");
    const int r = *reg;
    detail::two_coloring_checked(g, f, "odd_from_even_edge");
    const GirthResult gr = girth(g);
    if (gr.acyclic() || *gr.length % 2 != 0 || *gr.length < 6)
        throw std::invalid_argument("odd_from_even_edge: input girth must be even and >= 6");
    const int girth_in = *gr.length;

    int x = -1, y = -1;
    std::vector<int> cyc;
    for (int v = 0; v < g.order() && x < 0; ++v) {
        for (int w : g.neighbors(v)) {
            auto c = shortest_cycle_through(g, v, /*banned=*/w);
            if (c && static_cast<int>(c->size()) == girth_in) {
                x = v;
                y = w;
                cyc = std::move(*c);
                break;
            }
        }
    }
    if (x < 0) throw std::invalid_argument("odd_from_even_edge: no edge with a shortest cycle avoiding it");

    const int c1 = cyc[1], c2 = cyc.back();
    std::vector<int> xs{std::min(c1, c2), std::max(c1, c2)};
    for (int w : g.neighbors(x))
        if (w != y && w != c1 && w != c2) xs.push_back(w);
    std::vector<int> ys;
    for (int w : g.neighbors(y))
        if (w != x) ys.push_back(w);

    const Relabeled del = delete_vertices(g, {x, y});
    std::vector<int> color(static_cast<std::size_t>(del.graph.order()));
    for (int v = 0; v < g.order(); ++v)
        if (del.old_to_new[static_cast<std::size_t>(v)] >= 0)
            color[static_cast<std::size_t>(del.old_to_new[static_cast<std::size_t>(v)])] =
                f.assignment[static_cast<std::size_t>(v)];
    std::vector<Edge> added;
    for (const std::vector<int>& seq : {xs, ys}) {
        for (std::size_t i = 0; i + 1 < seq.size(); i += 2) {
            const int a = del.old_to_new[static_cast<std::size_t>(seq[i])];
            const int b = del.old_to_new[static_cast<std::size_t>(seq[i + 1])];
            added.emplace_back(a, b);
            color[static_cast<std::size_t>(b)] = 2;
        }
    }
    const Graph h = add_edges(del.graph, added);

    nlohmann::ordered_json prov;
    prov["operation"] = "odd_from_even_edge";
    prov["deleted_edge"] = {x, y};
    prov["x_side_order"] = xs;
    prov["y_side_order"] = ys;
    auto& ae = prov["added_edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : added) ae.push_back({e.u, e.v});
    prov["order"] = h.order();

    ConstructionOutput out{h, Coloring::from_assignment(std::move(color), 3),
                           CageParams{r, girth_in - 1, 3, false}, std::move(prov)};
    detail::verify_construction(out);
    return out;
}

/// Even-girth construction: subdivide a well-chosen edge xy with a new
/// vertex z (colored with a third class) and glue copies at z to restore
/// regularity -- r/2 copies identified at z for even r; for odd r, an
/// H/H' pair joined by the bridge zz' (H' swaps classes 0 and 2) plus
/// (r-3)/2 further copies identified on each side. The edge is chosen, in id
/// order, so that some shortest cycle avoids it, which keeps the girth at g;
/// if every shortest cycle uses every such edge (as in a lone even cycle)
/// the output's girth is g+1 and the claim records that. The subdivided
/// cycle of odd length g+1 through z certifies that three classes are needed.
inline ConstructionOutput subdivide_and_glue(const Graph& g, const Coloring& f) {
    const auto reg = regularity(g);
    if (!reg || *reg < 2) throw std::invalid_argument("subdivide_and_glue: input must be r-regular, r >= 2");
    const int r = *reg;
    detail::two_coloring_checked(g, f, "subdivide_and_glue");
    const GirthResult gr = girth(g);
    if (gr.acyclic() || *gr.length % 2 != 0)
        throw std::invalid_argument("subdivide_and_glue: input girth must be even");
    const int girth_in = *gr.length;

    std::optional<Edge> chosen, fallback;
    for (const Edge& e : g.edges()) {
        const auto through = shortest_cycle_with_edge(g, e);
        if (!through || *through != girth_in) continue;
        if (!fallback) fallback = e;
        const GirthResult without = girth(remove_edges(g, {e}));
        if (!without.acyclic() && *without.length == girth_in) {
            chosen = e;
            break;
        }
    }
    if (!chosen && !fallback) throw std::invalid_argument("subdivide_and_glue: no edge lies on a shortest cycle");
    const bool girth_kept = chosen.has_value();
    const Edge xy = chosen ? *chosen : *fallback;
    const int claimed_girth = girth_kept ? girth_in : girth_in + 1;

    const Subdivided sub = subdivide_edge(g, xy);
    const Graph& h = sub.graph;
    const int z = sub.new_vertex;
    std::vector<int> fh(f.assignment);
    fh.push_back(2);
    std::vector<int> fh_swapped(fh);
    for (int& c : fh_swapped) c = (c == 0 ? 2 : (c == 2 ? 0 : c));

    const int h_copies = (r % 2 == 0) ? r / 2 : (r - 1) / 2;
    const int hp_copies = (r % 2 == 0) ? 0 : (r - 1) / 2;
    const std::vector<Graph> copies(static_cast<std::size_t>(h_copies + hp_copies), h);
    const DisjointUnion du = disjoint_union(copies);

    std::vector<int> color(static_cast<std::size_t>(du.graph.order()));
    for (int j = 0; j < h_copies + hp_copies; ++j) {
        const std::vector<int>& src = j < h_copies ? fh : fh_swapped;
        for (int v = 0; v < h.order(); ++v)
            color[static_cast<std::size_t>(du.offsets[static_cast<std::size_t>(j)] + v)] =
                src[static_cast<std::size_t>(v)];
    }

    Graph out_graph = du.graph;
    std::vector<int> total_map(static_cast<std::size_t>(du.graph.order()));
    for (std::size_t v = 0; v < total_map.size(); ++v) total_map[v] = static_cast<int>(v);

    auto identify_group = [&](const std::vector<int>& group_orig) {
        std::vector<int> group;
        for (int v : group_orig) group.push_back(total_map[static_cast<std::size_t>(v)]);
        const Relabeled merged = identify_vertices(out_graph, group);
        out_graph = merged.graph;
        for (std::size_t v = 0; v < total_map.size(); ++v)
            total_map[v] = merged.old_to_new[static_cast<std::size_t>(total_map[v])];
    };

    std::vector<int> z_group, zp_group;
    for (int j = 0; j < h_copies; ++j) z_group.push_back(du.offsets[static_cast<std::size_t>(j)] + z);
    for (int j = h_copies; j < h_copies + hp_copies; ++j) zp_group.push_back(du.offsets[static_cast<std::size_t>(j)] + z);
    if (z_group.size() > 1) identify_group(z_group);
    if (zp_group.size() > 1) identify_group(zp_group);
    if (!zp_group.empty()) {
        const int za = total_map[static_cast<std::size_t>(z_group.front())];
        const int zb = total_map[static_cast<std::size_t>(zp_group.front())];
        out_graph = add_edges(out_graph, {Edge(za, zb)});
    }

    const Coloring big = Coloring::from_assignment(std::move(color), 3);
    const Coloring final_coloring = transport_coloring(big, total_map, out_graph.order());

    nlohmann::ordered_json prov;
    prov["operation"] = "subdivide_and_glue";
    prov["subdivided_edge"] = {xy.u, xy.v};
    prov["girth_kept_by_avoiding_cycle"] = girth_kept;
    prov["copies"] = h_copies + hp_copies;
    prov["order"] = out_graph.order();

    ConstructionOutput out{std::move(out_graph), final_coloring, CageParams{r, claimed_girth, 3, false},
                           std::move(prov)};
    detail::verify_construction(out);
    return out;
}

/// Three disjoint copies of a 3-chromatic graph, with the classes rotated
/// copy by copy so each output class collects one input class from each
/// copy; all three output classes then have size |V(g)|, an equitable
/// coloring. Claims the input's (r, g) with chi = 3.
inline ConstructionOutput equitable_triple(const Graph& g, const Coloring& c) {
    if (c.k != 3) throw std::invalid_argument("equitable_triple: expected a 3-class coloring");
    for (int s : c.census)
        if (s == 0) throw std::invalid_argument("equitable_triple: all three classes must be nonempty");
    if (!verify_coloring(g, c)) throw std::invalid_argument("equitable_triple: coloring is not proper");
    const auto reg = regularity(g);
    if (!reg) throw std::invalid_argument("equitable_triple: input must be regular");
    const GirthResult gr = girth(g);
    if (gr.acyclic()) throw std::invalid_argument("equitable_triple: input must contain a cycle");

    const std::vector<Graph> copies(3, g);
    const DisjointUnion du = disjoint_union(copies);
    std::vector<int> color(static_cast<std::size_t>(du.graph.order()));
    for (int j = 0; j < 3; ++j)
        for (int v = 0; v < g.order(); ++v) {
            const int a = c.assignment[static_cast<std::size_t>(v)];
            color[static_cast<std::size_t>(du.offsets[static_cast<std::size_t>(j)] + v)] = ((a - j) % 3 + 3) % 3;
        }

    nlohmann::ordered_json prov;
    prov["operation"] = "equitable_triple";
    prov["copy_order"] = g.order();
    prov["input_census"] = c.census;
    prov["order"] = du.graph.order();

    ConstructionOutput out{du.graph, Coloring::from_assignment(std::move(color), 3),
                           CageParams{*reg, *gr.length, 3, true}, std::move(prov)};
    detail::verify_construction(out);
    if (out.coloring.spread() != 0)
        throw verification_error("equitable_triple: output census is not exactly balanced");
    return out;
}

/// Point-line incidence graph of the projective plane over the prime field
/// GF(q): points are the normalized triples, lines their duals, and a point
/// lies on a line when the dot product vanishes mod q. Gives the canonical
/// bipartite (q+1)-regular girth-6 inputs for the odd-girth surgeries.
inline Graph projective_incidence_graph(int q) {
    if (q < 2) throw std::invalid_argument("projective_incidence_graph: q must be a prime >= 2");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("projective_incidence_graph: q must be prime");

    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int a = 0; a < q; ++a) pts.push_back({0, 1, a});
    pts.push_back({0, 0, 1});
    const int N = static_cast<int>(pts.size());

    std::vector<Edge> edges;
    for (int p = 0; p < N; ++p)
        for (int l = 0; l < N; ++l) {
            const int dot = pts[static_cast<std::size_t>(p)][0] * pts[static_cast<std::size_t>(l)][0] +
                            pts[static_cast<std::size_t>(p)][1] * pts[static_cast<std::size_t>(l)][1] +
                            pts[static_cast<std::size_t>(p)][2] * pts[static_cast<std::size_t>(l)][2];
            if (dot % q == 0) edges.emplace_back(p, N + l);
        }
    Graph g = Graph::from_edge_list(2 * N, edges);

    const auto reg = regularity(g);
    const GirthResult gr = girth(g);
    if (g.order() != 2 * (q * q + q + 1) || !reg || *reg != q + 1 || !bipartition(g).is_bipartite() ||
        gr.acyclic() || *gr.length != 6)
        throw verification_error("projective_incidence_graph: incidence structure failed its checks");
    return g;
}

}  // namespace cages
