#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cages/graph.hpp"
#include "cages/coloring.hpp"

namespace cages {

/// Thrown for unreadable files and malformed serialized graphs.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// graph6: 6-bit big-endian encoding of the upper adjacency triangle, bytes
// offset by 63. Single-byte order header for n < 63, '~' + 3 bytes for
// 63 <= n < 2^18. Compatible with the usual generator/viewer tool chain.
// ---------------------------------------------------------------------------

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < (1 << 18)) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw io_error("graph6: order too large");
    }
    int buf = 0, bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            buf = (buf << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(buf + 63));
                buf = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((buf << (6 - bits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    if (s.empty()) throw io_error("graph6: empty input");

    auto need = [&](std::size_t i) -> int {
        if (i >= s.size()) throw io_error("graph6: truncated input");
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw io_error("graph6: byte out of range");
        return c - 63;
    };

    std::size_t pos = 0;
    long long n = 0;
    if (need(0) == 63) {
        if (need(1) == 63) throw io_error("graph6: 8-byte order header not supported");
        n = (static_cast<long long>(need(1)) << 12) | (need(2) << 6) | need(3);
        pos = 4;
    } else {
        n = need(0);
        pos = 1;
    }

    std::vector<Edge> edges;
    int buf = 0, bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                buf = need(pos++);
                bits = 6;
            }
            if (buf & (1 << (bits - 1))) edges.emplace_back(u, v);
            --bits;
        }
    }
    if (pos != s.size()) throw io_error("graph6: trailing bytes");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

// ---------------------------------------------------------------------------
// JSON graph format: {"n": int, "edges": [[u, v], ...]}
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json to_json_graph(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto& arr = j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) arr.push_back({e.u, e.v});
    return j;
}

inline Graph from_json_graph(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw io_error("json graph: expected {\"n\":..., \"edges\":[[u,v],...]}");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw io_error("json graph: bad edge entry");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph::from_edge_list(n, edges);
}

// ---------------------------------------------------------------------------
// DOT export, optionally with one fill color per color class.
// ---------------------------------------------------------------------------

inline std::string to_dot(const Graph& g, const Coloring* coloring = nullptr) {
    static const char* kPalette[] = {"red",    "green",  "blue",   "orange", "purple",
                                     "cyan",   "yellow", "magenta", "gray",   "brown"};
    constexpr int kPaletteSize = 10;
    std::ostringstream os;
    os << "graph G {\n";
    if (coloring != nullptr) os << "  node [style=filled];\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (coloring != nullptr) {
            const int c = coloring->assignment.at(static_cast<std::size_t>(v));
            os << " [fillcolor=" << kPalette[c % kPaletteSize] << ", colorclass=" << c << "]";
        }
        os << ";\n";
    }
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// File loading with format auto-detection: '{' means the JSON graph format,
// anything else is treated as graph6.
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph load_graph_auto(const std::string& path) {
    const std::string text = read_file(path);
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
    if (i == text.size()) throw io_error(path + ": empty file");
    if (text[i] == '{') return from_json_graph(nlohmann::json::parse(text));
    return from_graph6(std::string_view(text).substr(i));
}

}  // namespace cages
