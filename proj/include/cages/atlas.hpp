#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cages/coloring.hpp"
#include "cages/graph.hpp"
#include "cages/graph_io.hpp"
#include "cages/invariants.hpp"

namespace cages::atlas {

/// A bundled named graph: the graph itself, the parameters it is known to
/// have, and the colorings shipped with it. Integrity is re-verified on
/// every load; a bundle that fails its own claims throws.
struct AtlasEntry {
    std::string name;
    Graph graph;
    CageParams params;
    std::vector<std::pair<std::string, Coloring>> colorings;
    std::string source;
};

struct AtlasSummary {
    std::string name;
    int order = 0;
    CageParams params;
};

namespace detail {

// Hamiltonian-cycle-plus-chords presentation: an n-cycle 1..n plus chord
// pairs, all 1-based as drawn.
inline Graph cycle_plus_chords(int n, const std::vector<std::pair<int, int>>& chords) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i - 1, i % n);
    for (auto [a, b] : chords) edges.emplace_back(a - 1, b - 1);
    return Graph::from_edge_list(n, edges);
}

// Coloring from 1-based class lists; vertices in no listed class fall into
// the last class.
inline Coloring classes_with_rest(int n, int k, const std::vector<std::vector<int>>& listed) {
    std::vector<int> a(static_cast<std::size_t>(n), k - 1);
    for (std::size_t c = 0; c < listed.size(); ++c)
        for (int v : listed[c]) a[static_cast<std::size_t>(v - 1)] = static_cast<int>(c);
    return Coloring::from_assignment(std::move(a), k);
}

inline AtlasEntry make_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    AtlasEntry e;
    e.name = "petersen";
    e.graph = Graph::from_edge_list(10, edges);
    e.params = {3, 5, 3, true};
    e.colorings.emplace_back("equitable",
                             Coloring::from_classes(10, 3, {{0, 2, 8, 9}, {1, 3, 5}, {4, 6, 7}}));
    e.source = "outer 5-cycle, inner pentagram, spokes; unique (3,5)-cage";
    return e;
}

inline AtlasEntry make_heawood() {
    std::vector<Edge> edges;
    for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
    AtlasEntry e;
    e.name = "heawood";
    e.graph = Graph::from_edge_list(14, edges);
    e.params = {3, 6, 2, true};
    std::vector<std::vector<int>> sides(2);
    for (int v = 0; v < 14; ++v) sides[static_cast<std::size_t>(v % 2)].push_back(v);
    e.colorings.emplace_back("equitable", Coloring::from_classes(14, 2, sides));
    e.source = "LCF [5,-5]^7; unique (3,6)-cage, incidence graph of the Fano plane";
    return e;
}

inline AtlasEntry make_mcgee() {
    const std::vector<std::pair<int, int>> chords{{1, 8},  {2, 19},  {3, 15},  {4, 11}, {5, 22},  {6, 18},
                                                  {7, 14}, {9, 21},  {10, 17}, {12, 24}, {13, 20}, {16, 23}};
    AtlasEntry e;
    e.name = "mcgee";
    e.graph = cycle_plus_chords(24, chords);
    e.params = {3, 7, 3, true};
    e.colorings.emplace_back("equitable",
                             classes_with_rest(24, 3,
                                               {{6, 8, 10, 12, 14, 16, 20, 22}, {2, 4, 7, 9, 13, 15, 18, 24}}));
    e.source = "24-cycle plus chords; unique (3,7)-cage";
    return e;
}

inline AtlasEntry make_cage_3_9() {
    const std::vector<std::pair<int, int>> chords{
        {1, 46},  {2, 52},  {3, 19},  {4, 32},  {5, 14},  {6, 49},  {7, 57},  {8, 25},  {9, 40},  {10, 30},
        {11, 20}, {12, 44}, {13, 37}, {15, 23}, {16, 41}, {17, 56}, {18, 27}, {21, 48}, {22, 34}, {24, 53},
        {26, 45}, {28, 36}, {29, 50}, {31, 55}, {33, 43}, {35, 58}, {38, 54}, {39, 47}, {42, 51}};
    AtlasEntry e;
    e.name = "cage-3-9-paper";
    e.graph = cycle_plus_chords(58, chords);
    e.params = {3, 9, 3, true};
    e.colorings.emplace_back(
        "equitable",
        classes_with_rest(58, 3,
                          {{2, 5, 7, 10, 13, 16, 19, 23, 25, 28, 33, 35, 38, 40, 42, 44, 47, 50, 53, 56},
                           {3, 6, 9, 12, 15, 18, 20, 22, 26, 30, 32, 36, 39, 43, 46, 48, 52, 55, 58}}));
    e.source = "58-cycle plus chords; one of the eighteen (3,9)-cages";
    return e;
}

inline AtlasEntry make_cage_3_11() {
    const std::vector<std::pair<int, int>> chords{
        {1, 79},  {2, 15},  {3, 55},   {4, 38},  {5, 67},  {6, 103}, {7, 49},  {8, 18},  {9, 110}, {10, 72},
        {11, 40}, {12, 32}, {13, 24},  {14, 46}, {16, 90}, {17, 63}, {19, 35}, {20, 43}, {21, 57}, {22, 87},
        {23, 104}, {25, 96}, {26, 76}, {27, 37}, {29, 91}, {30, 58}, {31, 66}, {33, 52}, {34, 100}, {36, 82},
        {39, 61}, {41, 93}, {42, 78},  {44, 68}, {45, 108}, {47, 83}, {48, 59}, {50, 77}, {51, 88}, {53, 107},
        {54, 95}, {56, 73}, {60, 98},  {62, 106}, {64, 75}, {65, 85}, {69, 97}, {70, 89}, {71, 81}, {74, 101},
        {80, 105}, {84, 94}, {86, 111}, {92, 102}, {99, 112}, {28, 109}};
    AtlasEntry e;
    e.name = "cage-3-11";
    e.graph = cycle_plus_chords(112, chords);
    e.params = {3, 11, 3, true};
    e.colorings.emplace_back(
        "equitable",
        classes_with_rest(112, 3,
                          {{2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32, 35, 38, 41, 44, 47, 49, 52, 55, 58,
                            61, 64, 69, 71, 74, 79, 82, 85, 89, 92, 96, 98, 100, 103, 105, 108, 111},
                           {1, 4, 7, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46, 50, 54, 57, 59,
                            62, 65, 67, 70, 73, 76, 78, 80, 83, 86, 88, 91, 94, 99, 101, 104, 107, 110}}));
    e.source = "112-cycle plus chords; unique (3,11)-cage";
    return e;
}

inline AtlasEntry make_robertson() {
    const std::vector<std::pair<int, int>> chords{{1, 5},  {1, 16}, {2, 13}, {2, 9},  {3, 18}, {3, 7}, {4, 15},
                                                  {4, 12}, {6, 17}, {6, 13}, {7, 11}, {8, 19}, {8, 15}, {9, 17},
                                                  {10, 5}, {10, 14}, {14, 18}, {16, 11}, {19, 12}};
    AtlasEntry e;
    e.name = "robertson";
    e.graph = cycle_plus_chords(19, chords);
    e.params = {4, 5, 3, false};
    e.colorings.emplace_back("chi-witness",
                             classes_with_rest(19, 3, {{2, 4, 6, 8, 10, 16, 18}, {1, 7, 12, 14, 17}}));
    e.source = "19-cycle plus chords; unique (4,5)-cage";
    return e;
}

inline AtlasEntry make_eq_cage_453() {
    const std::vector<std::pair<int, int>> edge_list{
        {16, 1}, {1, 20},  {16, 15}, {16, 7},  {16, 17}, {1, 9},  {1, 2},  {20, 5},  {20, 12}, {20, 19},
        {15, 3}, {15, 10}, {15, 14}, {7, 8},   {7, 11},  {7, 6},  {17, 4}, {17, 18}, {17, 13}, {9, 8},
        {9, 10}, {9, 13},  {2, 3},   {2, 18},  {2, 6},   {5, 4},  {5, 10}, {5, 6},   {12, 3},  {12, 11},
        {12, 13}, {19, 8}, {19, 18}, {19, 14}, {8, 4},   {4, 3},  {10, 11}, {11, 18}, {13, 14}, {14, 6}};
    std::vector<Edge> edges;
    for (auto [a, b] : edge_list) edges.emplace_back(a - 1, b - 1);
    AtlasEntry e;
    e.name = "eq-cage-4-5-3";
    e.graph = Graph::from_edge_list(20, edges);
    e.params = {4, 5, 3, true};
    e.colorings.emplace_back("equitable",
                             classes_with_rest(20, 3, {{16, 2, 9, 20, 4, 14, 11}, {3, 10, 13, 18, 6, 8}}));
    e.source = "order-20 4-regular girth-5 graph with an equitable 3-coloring";
    return e;
}

inline AtlasEntry build(const std::string& name) {
    if (name == "petersen") return make_petersen();
    if (name == "heawood") return make_heawood();
    if (name == "mcgee") return make_mcgee();
    if (name == "cage-3-9-paper") return make_cage_3_9();
    if (name == "cage-3-11") return make_cage_3_11();
    if (name == "robertson") return make_robertson();
    if (name == "eq-cage-4-5-3") return make_eq_cage_453();
    throw std::invalid_argument("unknown atlas entry: " + name);
}

inline void verify_entry(const AtlasEntry& e) {
    const Graph& g = e.graph;
    if (!g.invariants_hold()) throw verification_error(e.name + ": graph invariants violated");
    const auto reg = regularity(g);
    if (!reg || *reg != e.params.r) throw verification_error(e.name + ": not " + std::to_string(e.params.r) + "-regular");
    const GirthResult gr = girth(g);
    if (gr.acyclic() || *gr.length != e.params.g)
        throw verification_error(e.name + ": girth is not " + std::to_string(e.params.g));
    if (g.order() <= 60) {
        if (chromatic_number(g).chi != e.params.chi)
            throw verification_error(e.name + ": chromatic number is not " + std::to_string(e.params.chi));
    } else {
        const bool bip = bipartition(g).is_bipartite();
        if (bip != (e.params.chi == 2))
            throw verification_error(e.name + ": bipartiteness contradicts claimed chromatic number");
        bool witness = false;
        for (const auto& [label, c] : e.colorings) witness = witness || (c.k == e.params.chi);
        if (!witness) throw verification_error(e.name + ": no bundled witness for the claimed chromatic number");
    }
    bool equitable_bundled = false;
    for (const auto& [label, c] : e.colorings) {
        if (!verify_coloring(g, c)) throw verification_error(e.name + ": bundled coloring '" + label + "' is improper");
        if (label == "equitable") {
            if (c.spread() > 1)
                throw verification_error(e.name + ": coloring labeled equitable has census spread > 1");
            equitable_bundled = true;
        }
    }
    if (equitable_bundled != e.params.equitable)
        throw verification_error(e.name + ": equitable flag disagrees with the bundled colorings");
}

}  // namespace detail

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> k{"petersen",  "heawood",  "mcgee", "cage-3-9-paper",
                                            "cage-3-11", "robertson", "eq-cage-4-5-3"};
    return k;
}

/// Loads a bundled entry by name with its integrity re-verified.
inline AtlasEntry load(const std::string& name) {
    AtlasEntry e = detail::build(name);
    detail::verify_entry(e);
    return e;
}

inline std::vector<AtlasSummary> list() {
    std::vector<AtlasSummary> out;
    for (const std::string& n : names()) {
        const AtlasEntry e = detail::build(n);
        out.push_back({e.name, e.graph.order(), e.params});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Data directory: atlas/<name>.g6, atlas/<name>.colorings.json,
// atlas/index.json. The committed files are renders of the entries above;
// a test pins them byte for byte.
// ---------------------------------------------------------------------------

inline std::string render_g6(const AtlasEntry& e) { return to_graph6(e.graph) + "\n"; }

inline std::string render_colorings_json(const AtlasEntry& e) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    auto& arr = j["colorings"] = nlohmann::ordered_json::array();
    for (const auto& [label, c] : e.colorings) {
        nlohmann::ordered_json jc;
        jc["label"] = label;
        jc["k"] = c.k;
        jc["classes"] = c.classes();
        arr.push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

inline std::string render_index_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const std::string& n : names()) {
        const AtlasEntry e = detail::build(n);
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["order"] = e.graph.order();
        j["r"] = e.params.r;
        j["girth"] = e.params.g;
        j["chi"] = e.params.chi;
        j["equitable"] = e.params.equitable;
        auto& labels = j["colorings"] = nlohmann::ordered_json::array();
        for (const auto& [label, c] : e.colorings) labels.push_back(label);
        j["source"] = e.source;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

inline void write_data_dir(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto write = [](const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw io_error("cannot write " + p.string());
        out << text;
    };
    for (const std::string& n : names()) {
        const AtlasEntry e = load(n);
        write(dir / (n + ".g6"), render_g6(e));
        write(dir / (n + ".colorings.json"), render_colorings_json(e));
    }
    write(dir / "index.json", render_index_json());
}

}  // namespace cages::atlas
