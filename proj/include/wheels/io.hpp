#pragma once

// Text formats: graph6, the plain edge list (with optional terminal and name
// lines), and DOT for visualization.
//
// Edge-list layout:
//   n
//   a b          one 0-indexed pair per line
//   S: i1 i2 ... terminal sequence (optional)
//   N: id0 id1 ... vertex names in index order (optional, omitted when the
//                  ids are exactly 0..n-1)
// Blank lines and lines starting with '#' are ignored.

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wheels/error.hpp"
#include "wheels/graph.hpp"
#include "wheels/terminal_graph.hpp"

namespace wheels::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline long parse_index(std::string_view tok) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
        throw input_error("expected a nonnegative integer, got '" + std::string(tok) + "'");
    }
    return value;
}

inline bool ids_are_indices(const Graph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (g.vertices()[i] != std::to_string(i)) return false;
    }
    return true;
}

}  // namespace detail

/// Standard graph6 (n < 258048). Vertex ids become "0".."n-1".
inline Graph parse_graph6(std::string_view line) {
    line = detail::trim(line);
    if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
    if (line.empty()) throw input_error("empty graph6 string");
    for (char c : line) {
        if (c < 63 || c > 126) throw input_error("invalid graph6 character");
    }
    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] != 126) {
        n = static_cast<std::size_t>(line[0] - 63);
        pos = 1;
    } else {
        if (line.size() < 4 || line[1] == 126) throw input_error("graph6 graphs above 258047 vertices are not supported");
        n = (static_cast<std::size_t>(line[1] - 63) << 12) | (static_cast<std::size_t>(line[2] - 63) << 6) |
            static_cast<std::size_t>(line[3] - 63);
        pos = 4;
    }
    const std::size_t bits_needed = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t chars_needed = (bits_needed + 5) / 6;
    if (line.size() - pos != chars_needed) throw input_error("graph6 length does not match vertex count");
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int chunk = line[pos + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return Graph::with_indices(n, edges);
}

/// graph6 of g with vertices numbered in the graph's canonical order.
inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw input_error("graph too large for graph6 writer");
    }
    int chunk = 0, filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

/// Result of reading a graph file: the graph and, if present, its terminal sequence.
struct GraphDocument {
    Graph graph;
    std::optional<std::vector<Vertex>> terminals;

    TerminalGraph terminal_graph(bool ordered = true) const {
        return TerminalGraph(graph, terminals.value_or(std::vector<Vertex>{}), ordered);
    }
};

inline GraphDocument parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::optional<std::size_t> n;
    std::vector<std::pair<long, long>> pairs;
    std::optional<std::vector<long>> terminal_idx;
    std::optional<std::vector<std::string>> names;
    while (std::getline(in, raw)) {
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.rfind("S:", 0) == 0) {
            std::vector<long> idx;
            for (const auto& tok : detail::split_ws(line.substr(2))) idx.push_back(detail::parse_index(tok));
            terminal_idx = std::move(idx);
            continue;
        }
        if (line.rfind("N:", 0) == 0) {
            names = detail::split_ws(line.substr(2));
            continue;
        }
        auto toks = detail::split_ws(line);
        if (!n) {
            if (toks.size() != 1) throw input_error("edge list must start with the vertex count");
            n = static_cast<std::size_t>(detail::parse_index(toks[0]));
            continue;
        }
        if (toks.size() != 2) throw input_error("malformed edge line '" + std::string(line) + "'");
        pairs.emplace_back(detail::parse_index(toks[0]), detail::parse_index(toks[1]));
    }
    if (!n) throw input_error("edge list is empty");
    std::vector<Vertex> ids;
    if (names) {
        if (names->size() != *n) throw input_error("N: line must name every vertex");
        ids = *names;
    } else {
        for (std::size_t i = 0; i < *n; ++i) ids.push_back(std::to_string(i));
    }
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) {
        if (static_cast<std::size_t>(a) >= *n || static_cast<std::size_t>(b) >= *n) {
            throw input_error("edge endpoint out of range");
        }
        edges.emplace_back(ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]);
    }
    GraphDocument doc{Graph(ids, edges), std::nullopt};
    if (terminal_idx) {
        std::vector<Vertex> ts;
        for (long i : *terminal_idx) {
            if (static_cast<std::size_t>(i) >= *n) throw input_error("terminal index out of range");
            ts.push_back(ids[static_cast<std::size_t>(i)]);
        }
        doc.terminals = std::move(ts);
    }
    return doc;
}

/// Edge list of g (indices follow the canonical vertex order), with a trailing
/// S: line when terminals are given.
inline std::string to_edge_list(const Graph& g, const std::vector<Vertex>* terminals = nullptr) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (auto [a, b] : g.index_edges()) out << a << ' ' << b << '\n';
    if (terminals) {
        out << "S:";
        for (const auto& t : *terminals) out << ' ' << g.index(t);
        out << '\n';
    }
    if (!detail::ids_are_indices(g)) {
        out << "N:";
        for (const auto& v : g.vertices()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

inline std::string to_edge_list(const TerminalGraph& tg) { return to_edge_list(tg.graph(), &tg.terminals()); }

/// Reads either format. A graph6 body may be followed by an "S:" line.
inline GraphDocument parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        bool numeric = true;
        for (char c : line) {
            if (c < '0' || c > '9') numeric = false;
        }
        if (numeric) return parse_edge_list(text);
        GraphDocument doc{parse_graph6(line), std::nullopt};
        while (std::getline(in, raw)) {
            std::string_view rest = detail::trim(raw);
            if (rest.empty() || rest.front() == '#') continue;
            if (rest.rfind("S:", 0) != 0) throw input_error("unexpected line after graph6 body");
            std::vector<Vertex> ts;
            for (const auto& tok : detail::split_ws(rest.substr(2))) {
                const long i = detail::parse_index(tok);
                if (static_cast<std::size_t>(i) >= doc.graph.vertex_count()) throw input_error("terminal index out of range");
                ts.push_back(doc.graph.id(static_cast<int>(i)));
            }
            doc.terminals = std::move(ts);
        }
        return doc;
    }
    throw input_error("no graph found in input");
}

inline std::string to_dot(const Graph& g, const std::vector<Vertex>* terminals = nullptr,
                          std::string_view name = "G") {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (const auto& v : g.vertices()) {
        out << "  \"" << v << '"';
        if (terminals && std::find(terminals->begin(), terminals->end(), v) != terminals->end()) {
            out << " [shape=box]";
        }
        out << ";\n";
    }
    for (const auto& e : g.edges()) out << "  \"" << e.u << "\" -- \"" << e.v << "\";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const TerminalGraph& tg, std::string_view name = "G") {
    return to_dot(tg.graph(), &tg.terminals(), name);
}

}  // namespace wheels::io
