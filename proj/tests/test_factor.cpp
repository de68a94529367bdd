#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cages/factor.hpp"
#include "cages/graph.hpp"
#include "cages/invariants.hpp"
#include "oracles.hpp"

using namespace cages;

TEST_CASE("perfect matching basics") {
    const Graph k4 = complete_multipartite(PartSizes({1, 1, 1, 1}));
    const auto m = perfect_matching_avoiding(k4, {});
    REQUIRE(m.has_value());
    CHECK(m->is_perfect(4));

    // triangle x,y,z across the parts of the dense tripartite graph can be
    // kept out of the matching
    const Graph g = complete_multipartite(PartSizes({4, 3, 3}));
    const auto avoid = perfect_matching_avoiding(g, {Edge(0, 4), Edge(4, 7), Edge(0, 7)});
    REQUIRE(avoid.has_value());
    CHECK(avoid->is_perfect(10));
    for (const Edge& e : avoid->edges) {
        CHECK(e != Edge(0, 4));
        CHECK(e != Edge(4, 7));
        CHECK(e != Edge(0, 7));
    }

    // odd order: immediately absent
    CHECK(!perfect_matching_avoiding(complete_multipartite(PartSizes({1, 1, 1})), {}).has_value());
    CHECK(perfect_matching_avoiding(Graph(), {}).has_value());
}

TEST_CASE("perfect matching agrees with brute-force enumeration") {
    std::mt19937 rng(2024);
    int existing = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 6));
        const Graph g = oracles::random_graph(rng, n, 0.2 + 0.06 * (trial % 10));
        std::vector<Edge> forbidden;
        const std::vector<Edge> es = g.edges();
        for (std::size_t i = 0; i < es.size() && forbidden.size() < 2; i += 3) forbidden.push_back(es[i]);

        const auto mine = perfect_matching_avoiding(g, forbidden);
        const auto all = oracles::all_perfect_matchings(g, forbidden);
        REQUIRE(mine.has_value() == !all.empty());
        if (mine) {
            ++existing;
            CHECK(mine->is_perfect(n));
            for (const Edge& e : mine->edges) {
                CHECK(g.has_edge(e.u, e.v));
                CHECK(std::find(forbidden.begin(), forbidden.end(), e) == forbidden.end());
            }
        }
    }
    CHECK(existing > 30);
}

TEST_CASE("matching determinism") {
    const Graph g = complete_multipartite(PartSizes({3, 3}));
    const auto a = perfect_matching_avoiding(g, {});
    const auto b = perfect_matching_avoiding(g, {});
    REQUIRE(a.has_value());
    CHECK(a->edges == b->edges);
}

TEST_CASE("hamiltonian cycle in balanced bipartite graphs") {
    const Graph k33 = complete_multipartite(PartSizes({3, 3}));
    const auto c = hamiltonian_cycle_bipartite(k33);
    REQUIRE(c.has_value());
    CHECK(c->vertices.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(k33.has_edge(c->vertices[i], c->vertices[(i + 1) % 6]));

    // not bipartite: usage error
    CHECK_THROWS_AS(hamiltonian_cycle_bipartite(complete_multipartite(PartSizes({1, 1, 1}))),
                    std::invalid_argument);

    // unbalanced sides: immediately absent
    CHECK(!hamiltonian_cycle_bipartite(complete_multipartite(PartSizes({2, 4}))).has_value());

    // disconnected balanced graph: absent after search
    std::vector<Edge> c4_plus_pair{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(4, 5)};
    CHECK(!hamiltonian_cycle_bipartite(Graph::from_edge_list(6, c4_plus_pair)).has_value());
}

TEST_CASE("dense balanced bipartite graphs are always hamiltonian") {
    std::mt19937 rng(1963);
    for (int trial = 0; trial < 200; ++trial) {
        const int side = 3 + static_cast<int>(rng() % 5);
        const Graph g = oracles::random_moon_moser(rng, side, 0.55);
        const auto c = hamiltonian_cycle_bipartite(g);
        REQUIRE(c.has_value());
        CHECK(static_cast<int>(c->vertices.size()) == 2 * side);
        std::set<int> distinct(c->vertices.begin(), c->vertices.end());
        CHECK(static_cast<int>(distinct.size()) == 2 * side);
        for (std::size_t i = 0; i < c->vertices.size(); ++i)
            CHECK(g.has_edge(c->vertices[i], c->vertices[(i + 1) % c->vertices.size()]));
    }
}

TEST_CASE("one factor from an even cycle") {
    HamCycle six{{0, 1, 2, 3, 4, 5}};
    const Matching avoid01 = one_factor_from_cycle(six, Edge(0, 1));
    CHECK(avoid01.edges == std::vector<Edge>{Edge(1, 2), Edge(3, 4), Edge(5, 0)});

    HamCycle four{{0, 1, 2, 3}};
    const Matching even_side = one_factor_from_cycle(four, Edge(0, 2));  // not a cycle edge
    CHECK(even_side.edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});

    CHECK_THROWS_AS(one_factor_from_cycle(HamCycle{{0, 1, 2, 3, 4}}, Edge(0, 1)), std::invalid_argument);
}

TEST_CASE("alternating factors partition the cycle") {
    std::mt19937 rng(62);
    for (int trial = 0; trial < 50; ++trial) {
        const int len = 2 * (2 + static_cast<int>(rng() % 5));
        std::vector<int> verts(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) verts[static_cast<std::size_t>(i)] = i;
        std::shuffle(verts.begin(), verts.end(), rng);
        const HamCycle cyc{verts};
        const Edge avoid(verts[0], verts[1]);  // always a cycle edge
        const Matching m = one_factor_from_cycle(cyc, avoid);
        CHECK(m.vertex_disjoint());
        CHECK(static_cast<int>(m.edges.size()) * 2 == len);
        CHECK(std::find(m.edges.begin(), m.edges.end(), avoid) == m.edges.end());

        // the chosen factor plus its complement is exactly the cycle's edge set
        std::set<Edge> cycle_edges;
        for (int i = 0; i < len; ++i)
            cycle_edges.insert(Edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>((i + 1) % len)]));
        const Matching other = one_factor_from_cycle(cyc, m.edges.front());
        std::set<Edge> both(m.edges.begin(), m.edges.end());
        both.insert(other.edges.begin(), other.edges.end());
        CHECK(both == cycle_edges);
    }
}
