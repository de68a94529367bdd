#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cages/atlas.hpp"
#include "cages/coloring.hpp"
#include "cages/constructions.hpp"
#include "cages/graph.hpp"
#include "cages/graph_io.hpp"
#include "cages/invariants.hpp"
#include "cages/search.hpp"
#include "cages/verify.hpp"

namespace cages::cli {

// Exit codes: 0 success, 1 a checked property failed, 2 usage or input
// format error, 3 search ended inconclusively within its budget.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInconclusive = 3;

namespace detail {

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot write " + path);
    f << text;
}

inline nlohmann::ordered_json coloring_json(const Coloring& c) {
    nlohmann::ordered_json j;
    j["k"] = c.k;
    j["classes"] = c.classes();
    return j;
}

inline Coloring parse_coloring_json(const nlohmann::json& j, int n) {
    if (j.contains("colorings")) {
        const auto& arr = j.at("colorings");
        if (!arr.is_array() || arr.empty()) throw io_error("coloring file: empty colorings list");
        return parse_coloring_json(arr.front(), n);
    }
    if (!j.contains("k") || !j.contains("classes"))
        throw io_error("coloring file: expected {\"k\":..., \"classes\":[[v,...],...]}");
    std::vector<std::vector<int>> classes;
    for (const auto& cl : j.at("classes")) classes.push_back(cl.get<std::vector<int>>());
    return Coloring::from_classes(n, j.at("k").get<int>(), classes);
}

inline Coloring load_coloring_file(const std::string& path, int n) {
    return parse_coloring_json(nlohmann::json::parse(read_file(path)), n);
}

inline Coloring bipartition_coloring(const Graph& g) {
    const BipartitionResult bp = bipartition(g);
    if (!bp.is_bipartite()) throw std::invalid_argument("input graph is not bipartite");
    return Coloring::from_assignment(*bp.side, 2);
}

inline void emit_construction(const ConstructionOutput& c, const std::string& prefix, std::ostream& out) {
    const std::string g6_path = prefix + ".g6";
    const std::string coloring_path = prefix + ".coloring.json";
    const std::string provenance_path = prefix + ".provenance.json";
    write_file(g6_path, to_graph6(c.graph) + "\n");
    write_file(coloring_path, coloring_json(c.coloring).dump(2) + "\n");
    nlohmann::ordered_json prov;
    prov["claimed"] = {{"r", c.claimed.r}, {"g", c.claimed.g}, {"chi", c.claimed.chi}, {"equitable", c.claimed.equitable}};
    prov["order"] = c.graph.order();
    prov["provenance"] = c.provenance;
    write_file(provenance_path, prov.dump(2) + "\n");

    nlohmann::ordered_json summary;
    summary["order"] = c.graph.order();
    summary["claimed"] = prov["claimed"];
    summary["census"] = c.coloring.census;
    summary["connected"] = is_connected(c.graph).connected;
    summary["files"] = {g6_path, coloring_path, provenance_path};
    out << summary.dump(2) << "\n";
}

}  // namespace detail

/// Runs one CLI invocation; argv-style arguments without the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"constructions, colorings, and verification for (r,g,chi)-graphs", "cages"};
    app.require_subcommand(1);

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a graph and its coloring, writing g6 + JSON sidecars");
    construct->require_subcommand(1);
    int r33_r = 4;
    std::string out_prefix;
    auto* c_r33 = construct->add_subcommand("r33", "minimum-order (r,3,3)-graph");
    c_r33->add_option("--r", r33_r, "degree r >= 2")->required();
    c_r33->add_option("--out", out_prefix, "output file prefix");

    std::string og_input, og_mode = "vertex";
    auto* c_og = construct->add_subcommand("odd-girth", "odd-girth surgery on a bipartite even-girth input");
    c_og->add_option("--input", og_input, "input graph file (graph6 or JSON)")->required();
    c_og->add_option("--mode", og_mode, "vertex (even r) or edge (odd r)")
        ->check(CLI::IsMember({"vertex", "edge"}))
        ->required();
    c_og->add_option("--out", out_prefix, "output file prefix");

    std::string glue_input;
    auto* c_glue = construct->add_subcommand("glue", "subdivide an edge and glue copies, keeping even girth");
    c_glue->add_option("--input", glue_input, "input graph file")->required();
    c_glue->add_option("--out", out_prefix, "output file prefix");

    std::string triple_input, triple_coloring;
    auto* c_triple = construct->add_subcommand("triple", "three rotated copies with an equitable 3-coloring");
    c_triple->add_option("--input", triple_input, "input graph file")->required();
    c_triple->add_option("--coloring", triple_coloring, "proper 3-coloring file (JSON)")->required();
    c_triple->add_option("--out", out_prefix, "output file prefix");

    int pg_q = 2;
    auto* c_pg = construct->add_subcommand("pg", "projective plane incidence graph over GF(q)");
    c_pg->add_option("--q", pg_q, "prime order of the field")->required();
    c_pg->add_option("--out", out_prefix, "output file prefix");

    // verify ----------------------------------------------------------------
    auto* v = app.add_subcommand("verify", "run a named verification and print its report(s)");
    std::string claim;
    int r_max = 12, jobs = 1;
    bool text = false, timings = false;
    v->add_option("--claim", claim, "r33 | robertson | eq453 | equitable-list")
        ->check(CLI::IsMember({"r33", "robertson", "eq453", "equitable-list"}))
        ->required();
    v->add_option("--r-max", r_max, "largest degree for the r33 claim (default 12)");
    v->add_option("--jobs", jobs, "worker threads for independent checks");
    v->add_flag("--text", text, "human-readable lines instead of JSON");
    v->add_flag("--timings", timings, "include wall-clock runtimes in JSON output");

    // color -----------------------------------------------------------------
    auto* col = app.add_subcommand("color", "search for a proper (optionally equitable) k-coloring");
    std::string color_input;
    int color_k = 3;
    bool equitable = false;
    col->add_option("--input", color_input, "input graph file")->required();
    col->add_option("--k", color_k, "number of classes")->required();
    col->add_flag("--equitable", equitable, "restrict to balanced class sizes");

    // search ----------------------------------------------------------------
    auto* se = app.add_subcommand("search", "brute-force searches");
    se->require_subcommand(1);
    auto* mo = se->add_subcommand("min-order", "smallest order of an (r,g,chi)-graph within a budget");
    CageParams mo_params;
    bool mo_equitable = false;
    int mo_max_n = 12;
    std::uint64_t mo_nodes = std::numeric_limits<std::uint64_t>::max();
    double mo_time = std::numeric_limits<double>::infinity();
    mo->add_option("--r", mo_params.r, "degree")->required();
    mo->add_option("--g", mo_params.g, "girth")->required();
    mo->add_option("--chi", mo_params.chi, "chromatic number")->required();
    mo->add_flag("--equitable", mo_equitable, "require an equitable chi-coloring");
    mo->add_option("--max-n", mo_max_n, "largest order to try")->required();
    mo->add_option("--node-limit", mo_nodes, "total enumeration node budget");
    mo->add_option("--time-limit", mo_time, "wall-clock budget in seconds");

    // atlas -----------------------------------------------------------------
    auto* at = app.add_subcommand("atlas", "bundled named graphs");
    at->require_subcommand(1);
    auto* at_list = at->add_subcommand("list", "summaries of all bundled entries");
    std::string at_name;
    auto* at_get = at->add_subcommand("get", "one entry with graph6 and colorings");
    at_get->add_option("name", at_name, "entry name")->required();
    std::string dump_dir = "atlas";
    auto* at_dump = at->add_subcommand("dump", "write the atlas data directory");
    at_dump->add_option("--dir", dump_dir, "target directory (default: atlas)");

    // export ----------------------------------------------------------------
    auto* ex = app.add_subcommand("export", "convert a graph file");
    std::string ex_input, ex_format, ex_coloring, ex_out;
    ex->add_option("--input", ex_input, "input graph file")->required();
    ex->add_option("--format", ex_format, "g6 | dot | json")
        ->check(CLI::IsMember({"g6", "dot", "json"}))
        ->required();
    ex->add_option("--coloring", ex_coloring, "coloring file for DOT vertex colors");
    ex->add_option("--out", ex_out, "output file (default: stdout)");

    // parse -----------------------------------------------------------------
    std::vector<const char*> argv{"cages"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (c_r33->parsed()) {
            const ConstructionOutput c = r33_cage(r33_r);
            detail::emit_construction(c, out_prefix.empty() ? "r33-r" + std::to_string(r33_r) : out_prefix, out);
            return kOk;
        }
        if (c_og->parsed()) {
            const Graph g = load_graph_auto(og_input);
            const Coloring f = detail::bipartition_coloring(g);
            const ConstructionOutput c = og_mode == "vertex" ? odd_from_even_vertex(g, f) : odd_from_even_edge(g, f);
            detail::emit_construction(c, out_prefix.empty() ? "odd-girth-" + og_mode : out_prefix, out);
            return kOk;
        }
        if (c_glue->parsed()) {
            const Graph g = load_graph_auto(glue_input);
            const Coloring f = detail::bipartition_coloring(g);
            const ConstructionOutput c = subdivide_and_glue(g, f);
            detail::emit_construction(c, out_prefix.empty() ? "glue" : out_prefix, out);
            return kOk;
        }
        if (c_triple->parsed()) {
            const Graph g = load_graph_auto(triple_input);
            const Coloring c3 = detail::load_coloring_file(triple_coloring, g.order());
            const ConstructionOutput c = equitable_triple(g, c3);
            detail::emit_construction(c, out_prefix.empty() ? "triple" : out_prefix, out);
            return kOk;
        }
        if (c_pg->parsed()) {
            const Graph g = projective_incidence_graph(pg_q);
            const std::string prefix = out_prefix.empty() ? "pg-q" + std::to_string(pg_q) : out_prefix;
            detail::write_file(prefix + ".g6", to_graph6(g) + "\n");
            nlohmann::ordered_json summary;
            summary["order"] = g.order();
            summary["regular"] = pg_q + 1;
            summary["girth"] = 6;
            summary["bipartite"] = true;
            summary["files"] = {prefix + ".g6"};
            out << summary.dump(2) << "\n";
            return kOk;
        }
        if (v->parsed()) {
            std::vector<verify::VerificationReport> reports;
            if (claim == "r33")
                reports = verify::check_theorem_r33(r_max, jobs);
            else if (claim == "robertson")
                reports.push_back(verify::check_robertson());
            else if (claim == "eq453")
                reports.push_back(verify::check_eq_453_cage());
            else
                reports = verify::check_equitable_cages_list();

            bool all_pass = true;
            for (const auto& r : reports) all_pass = all_pass && r.pass;
            if (text) {
                for (const auto& r : reports) out << r.to_text() << "\n";
            } else if (reports.size() == 1) {
                out << reports.front().to_json(timings).dump(2) << "\n";
            } else {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& r : reports) arr.push_back(r.to_json(timings));
                out << arr.dump(2) << "\n";
            }
            return all_pass ? kOk : kPropertyFail;
        }
        if (col->parsed()) {
            const Graph g = load_graph_auto(color_input);
            nlohmann::ordered_json j;
            bool found = false;
            if (equitable) {
                const EquitableWitness w = exists_equitable_k_coloring(g, color_k);
                found = !w.exhausted();
                j["found"] = found;
                j["nodes"] = w.nodes_explored;
                if (found) {
                    j["census"] = w.coloring->census;
                    j["coloring"] = detail::coloring_json(*w.coloring);
                }
            } else {
                SearchStats stats;
                const auto c = exists_k_coloring(g, color_k, &stats);
                found = c.has_value();
                j["found"] = found;
                j["nodes"] = stats.nodes;
                if (found) {
                    j["census"] = c->census;
                    j["coloring"] = detail::coloring_json(*c);
                }
            }
            out << j.dump(2) << "\n";
            return found ? kOk : kPropertyFail;
        }
        if (mo->parsed()) {
            mo_params.equitable = mo_equitable;
            search::SearchBudget budget;
            budget.max_order = mo_max_n;
            budget.node_limit = mo_nodes;
            budget.time_limit_seconds = mo_time;
            const search::MinOrderResult res = search::min_order(mo_params, budget);
            nlohmann::ordered_json j;
            using Status = search::MinOrderResult::Status;
            j["status"] = res.status == Status::found ? "found"
                          : res.status == Status::not_found ? "not_found"
                                                            : "inconclusive";
            if (res.order) j["order"] = *res.order;
            if (res.witness) j["witness"] = to_graph6(*res.witness);
            j["certificate"] = res.certificate;
            out << j.dump(2) << "\n";
            return res.status == Status::found ? kOk : res.status == Status::not_found ? kPropertyFail : kInconclusive;
        }
        if (at_list->parsed()) {
            out << atlas::render_index_json();
            return kOk;
        }
        if (at_get->parsed()) {
            const atlas::AtlasEntry e = atlas::load(at_name);
            nlohmann::ordered_json j;
            j["name"] = e.name;
            j["order"] = e.graph.order();
            j["r"] = e.params.r;
            j["girth"] = e.params.g;
            j["chi"] = e.params.chi;
            j["equitable"] = e.params.equitable;
            j["source"] = e.source;
            j["graph6"] = to_graph6(e.graph);
            auto& cols = j["colorings"] = nlohmann::ordered_json::array();
            for (const auto& [label, c] : e.colorings) {
                nlohmann::ordered_json jc = detail::coloring_json(c);
                jc["label"] = label;
                cols.push_back(std::move(jc));
            }
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (at_dump->parsed()) {
            atlas::write_data_dir(dump_dir);
            out << "wrote atlas data to " << dump_dir << "\n";
            return kOk;
        }
        if (ex->parsed()) {
            const Graph g = load_graph_auto(ex_input);
            std::string text_out;
            if (ex_format == "g6") {
                if (!ex_coloring.empty()) throw io_error("--coloring applies to DOT export only");
                text_out = to_graph6(g) + "\n";
            } else if (ex_format == "json") {
                if (!ex_coloring.empty()) throw io_error("--coloring applies to DOT export only");
                text_out = to_json_graph(g).dump(2) + "\n";
            } else {
                if (!ex_coloring.empty()) {
                    const Coloring c = detail::load_coloring_file(ex_coloring, g.order());
                    text_out = to_dot(g, &c);
                } else {
                    text_out = to_dot(g);
                }
            }
            if (ex_out.empty())
                out << text_out;
            else
                detail::write_file(ex_out, text_out);
            return kOk;
        }
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const verification_error& e) {
        err << "verification failed: " << e.what() << "\n";
        return kPropertyFail;
    } catch (const std::invalid_argument& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kPropertyFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kPropertyFail;
    }
    err << "no subcommand\n";
    return kUsage;
}

}  // namespace cages::cli
