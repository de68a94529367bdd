#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cages/graph.hpp"
#include "cages/graph_io.hpp"
#include "cages/invariants.hpp"
#include "oracles.hpp"

using namespace cages;

namespace {

Graph triangle() { return Graph::from_edge_list(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}); }

Graph octahedron() { return complete_multipartite(PartSizes({2, 2, 2})); }

Graph heawood() {
    std::vector<Edge> edges;
    for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
    return Graph::from_edge_list(14, edges);
}

}  // namespace

TEST_CASE("from_edge_list basics") {
    const Graph k3 = triangle();
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 2));
    CHECK(k3.invariants_hold());

    const Graph empty2 = Graph::from_edge_list(2, std::initializer_list<Edge>{});
    CHECK(empty2.order() == 2);
    CHECK(empty2.edge_count() == 0);

    // duplicates collapse
    const Graph dup = Graph::from_edge_list(3, {Edge(0, 1), Edge(1, 0), Edge(0, 1)});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(2, {Edge(0, 5)}), std::invalid_argument);
    CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);
}

TEST_CASE("complete multipartite") {
    const Graph oct = octahedron();
    CHECK(oct.order() == 6);
    CHECK(oct.edge_count() == 12);
    CHECK(regularity(oct) == 4);

    CHECK(complete_multipartite(PartSizes({1, 1, 1})) == triangle());

    const Graph g = complete_multipartite(PartSizes({4, 3, 3}));
    CHECK(g.order() == 10);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 6);
    for (int v = 4; v < 10; ++v) CHECK(g.degree(v) == 7);

    CHECK_THROWS_AS(PartSizes({3}), std::invalid_argument);
    CHECK_THROWS_AS(PartSizes({2, 0}), std::invalid_argument);
}

TEST_CASE("remove_edges") {
    const Graph path = remove_edges(triangle(), {Edge(0, 1)});
    CHECK(path.edge_count() == 2);
    CHECK(!path.has_edge(0, 1));

    // a perfect matching of the octahedron leaves a cubic graph
    const Graph oct = octahedron();
    const Graph cubic = remove_edges(oct, {Edge(0, 2), Edge(1, 4), Edge(3, 5)});
    CHECK(regularity(cubic) == 3);

    const Graph k4 = complete_multipartite(PartSizes({1, 1, 1, 1}));
    const Graph none = remove_edges(k4, k4.edges());
    CHECK(none.order() == 4);
    CHECK(none.edge_count() == 0);

    CHECK_THROWS_AS(remove_edges(path, {Edge(0, 1)}), std::invalid_argument);
}

TEST_CASE("delete_vertices") {
    const Graph k4 = complete_multipartite(PartSizes({1, 1, 1, 1}));
    const Relabeled r = delete_vertices(k4, {3});
    CHECK(r.graph == triangle());
    CHECK(r.old_to_new == std::vector<int>{0, 1, 2, -1});

    // adjacent pair from the (3,6) graph: the two deleted vertices have two
    // other neighbors each, all distinct, so exactly four vertices drop to
    // degree 2
    const Graph hw = heawood();
    REQUIRE(hw.has_edge(0, 1));
    const Relabeled adj = delete_vertices(hw, {0, 1});
    CHECK(adj.graph.order() == 12);
    int twos = 0, threes = 0;
    for (int v = 0; v < 12; ++v) (adj.graph.degree(v) == 2 ? twos : threes)++;
    CHECK(twos == 4);
    CHECK(threes == 8);

    // a pair at distance three shares no neighbor: six vertices of degree 2
    const Relabeled far = delete_vertices(hw, {0, 3});
    int twos2 = 0;
    for (int v = 0; v < 12; ++v) twos2 += far.graph.degree(v) == 2;
    CHECK(twos2 == 6);

    const Relabeled all = delete_vertices(triangle(), {0, 1, 2});
    CHECK(all.graph.order() == 0);
}

TEST_CASE("add_edges") {
    const Graph path = Graph::from_edge_list(3, {Edge(0, 1), Edge(1, 2)});
    CHECK(add_edges(path, {Edge(0, 2)}) == triangle());

    const Graph matching = add_edges(Graph::from_edge_list(4, std::initializer_list<Edge>{}),
                                     {Edge(0, 1), Edge(2, 3)});
    CHECK(matching.edge_count() == 2);
    CHECK(regularity(matching) == 1);

    CHECK_THROWS_AS(add_edges(path, {Edge(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(add_edges(path, {Edge(0, 2), Edge(2, 0)}), std::invalid_argument);
}

TEST_CASE("subdivide_edge") {
    const Subdivided s = subdivide_edge(triangle(), Edge(0, 1));
    CHECK(s.graph.order() == 4);
    CHECK(s.new_vertex == 3);
    CHECK(*girth(s.graph).length == 4);

    // the (3,6) graph keeps girth 6: plenty of 6-cycles avoid any one edge
    const Subdivided hw = subdivide_edge(heawood(), Edge(0, 1));
    CHECK(hw.graph.order() == 15);
    CHECK(*girth(hw.graph).length == 6);
    CHECK(hw.graph.degree(hw.new_vertex) == 2);

    const Subdivided single = subdivide_edge(Graph::from_edge_list(2, {Edge(0, 1)}), Edge(0, 1));
    CHECK(single.graph.order() == 3);
    CHECK(single.graph.edge_count() == 2);
    CHECK(girth(single.graph).acyclic());

    CHECK_THROWS_AS(subdivide_edge(triangle(), Edge(0, 4)), std::invalid_argument);
}

TEST_CASE("subdivision properties on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracles::random_graph(rng, 10, 0.4);
        if (g.edge_count() == 0) continue;
        const std::vector<Edge> es = g.edges();
        const Edge e = es[static_cast<std::size_t>(trial) % es.size()];
        const Subdivided s = subdivide_edge(g, e);
        CHECK(s.graph.order() == g.order() + 1);
        CHECK(s.graph.edge_count() == g.edge_count() + 1);
        CHECK(s.graph.degree(s.new_vertex) == 2);
        CHECK(s.graph.invariants_hold());
    }
}

TEST_CASE("disjoint_union") {
    const DisjointUnion two = disjoint_union(std::vector<Graph>{triangle(), triangle()});
    CHECK(two.graph.order() == 6);
    CHECK(two.graph.edge_count() == 6);
    CHECK(is_connected(two.graph).components == 2);
    CHECK(two.offsets == std::vector<int>{0, 3});

    const DisjointUnion none = disjoint_union(std::vector<Graph>{});
    CHECK(none.graph.order() == 0);

    std::mt19937 rng(7);
    const Graph a = oracles::random_graph(rng, 8, 0.3), b = oracles::random_graph(rng, 9, 0.5);
    const DisjointUnion u = disjoint_union(std::vector<Graph>{a, b});
    CHECK(u.graph.order() == a.order() + b.order());
    CHECK(u.graph.edge_count() == a.edge_count() + b.edge_count());
}

TEST_CASE("identify_vertices") {
    // two disjoint single edges a-b, c-d; identifying {b, d} gives a 2-path
    const Graph g = Graph::from_edge_list(4, {Edge(0, 1), Edge(2, 3)});
    const Relabeled r = identify_vertices(g, {1, 3});
    CHECK(r.graph.order() == 3);
    CHECK(r.graph.edge_count() == 2);
    CHECK(r.old_to_new[1] == r.old_to_new[3]);
    CHECK(r.graph.degree(r.old_to_new[1]) == 2);

    CHECK_THROWS_AS(identify_vertices(triangle(), {0, 1}), std::invalid_argument);
    // overlapping neighborhoods would create a parallel edge
    const Graph star = Graph::from_edge_list(3, {Edge(0, 2), Edge(1, 2)});
    CHECK_THROWS_AS(identify_vertices(star, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(identify_vertices(star, std::initializer_list<int>{}), std::invalid_argument);

    // two subdivided copies of the (3,6) graph, z's identified: 29 vertices,
    // merged vertex of degree 4
    const Subdivided s = subdivide_edge(heawood(), Edge(0, 1));
    const DisjointUnion u = disjoint_union(std::vector<Graph>{s.graph, s.graph});
    const Relabeled m = identify_vertices(u.graph, {s.new_vertex, s.new_vertex + 15});
    CHECK(m.graph.order() == 29);
    CHECK(m.graph.degree(m.old_to_new[static_cast<std::size_t>(s.new_vertex)]) == 4);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng() % 31);
        const Graph g = oracles::random_graph(rng, n, 0.1 + 0.8 * (trial % 10) / 10.0);
        const Graph back = from_graph6(to_graph6(g));
        REQUIRE(back == g);
    }
}

TEST_CASE("graph6 known encodings and header handling") {
    const Graph k4 = complete_multipartite(PartSizes({1, 1, 1, 1}));
    CHECK(to_graph6(k4) == "C~");
    std::vector<Edge> c5;
    for (int i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
    CHECK(to_graph6(Graph::from_edge_list(5, c5)) == "Dhc");

    CHECK(from_graph6(">>graph6<<C~\n") == k4);
    CHECK(from_graph6("C~") == k4);

    // 4-byte order header kicks in at n = 63
    std::vector<Edge> big;
    for (int i = 0; i < 63; ++i) big.emplace_back(i, (i + 1) % 63);
    const Graph c63 = Graph::from_edge_list(63, big);
    const std::string s = to_graph6(c63);
    CHECK(s[0] == '~');
    CHECK(from_graph6(s) == c63);

    CHECK_THROWS_AS(from_graph6(""), io_error);
    CHECK_THROWS_AS(from_graph6("C"), io_error);
    CHECK_THROWS_AS(from_graph6("C~~~~"), io_error);
}

TEST_CASE("json graph round trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.4);
        CHECK(from_json_graph(to_json_graph(g)) == g);
    }
    CHECK_THROWS_AS(from_json_graph(nlohmann::json::parse("{\"n\": 2}")), io_error);
}

TEST_CASE("dot export") {
    const std::string plain = to_dot(triangle());
    CHECK(plain.find("0 -- 1;") != std::string::npos);
    CHECK(plain.find("fillcolor") == std::string::npos);

    const Coloring c = Coloring::from_assignment({0, 1, 2}, 3);
    const std::string colored = to_dot(triangle(), &c);
    CHECK(colored.find("fillcolor=red") != std::string::npos);
    CHECK(colored.find("fillcolor=blue") != std::string::npos);
}

TEST_CASE("surgery outputs satisfy the structural validator") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracles::random_graph(rng, 12, 0.35);
        CHECK(g.invariants_hold());
        const Relabeled d = delete_vertices(g, {static_cast<int>(rng() % 12)});
        CHECK(d.graph.invariants_hold());
        if (g.edge_count() > 0) {
            const Edge e = g.edges().front();
            CHECK(subdivide_edge(g, e).graph.invariants_hold());
            CHECK(remove_edges(g, {e}).invariants_hold());
        }
    }
}
