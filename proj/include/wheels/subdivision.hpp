#pragma once

// K5-subdivisions: the witness type, an independent validator, exact search,
// and the construction from a wheel plus two crossing paths.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wheels/dense.hpp"
#include "wheels/error.hpp"
#include "wheels/graph.hpp"
#include "wheels/linkage.hpp"
#include "wheels/wheel.hpp"

namespace wheels {

/// K5 edges in the fixed order used by Subdivision::paths.
inline constexpr std::array<std::pair<int, int>, 10> kK5Edges{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
}};

struct Subdivision {
    std::array<Vertex, 5> branch;
    std::array<std::vector<Vertex>, 10> paths;

    /// All vertices and edges used, as a subgraph.
    Graph as_graph() const {
        VertexSet vs(branch.begin(), branch.end());
        EdgeSet es;
        for (const auto& p : paths) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                vs.insert(p[i]);
                if (i + 1 < p.size()) es.emplace(p[i], p[i + 1]);
            }
        }
        return Graph(std::vector<Vertex>(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));
    }

    bool uses_edge(const Edge& e) const {
        for (const auto& p : paths) {
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if (Edge(p[i], p[i + 1]) == e) return true;
            }
        }
        return false;
    }
};

/// Empty string when s is a K5-subdivision of g, otherwise the first defect.
inline std::string subdivision_defect(const Graph& g, const Subdivision& s) {
    VertexSet branch;
    for (const auto& b : s.branch) {
        if (!g.contains(b)) return "branch vertex '" + b + "' not in graph";
        if (!branch.insert(b).second) return "branch vertex '" + b + "' repeated";
    }
    VertexSet interiors;
    for (std::size_t i = 0; i < kK5Edges.size(); ++i) {
        const auto& p = s.paths[i];
        const auto& a = s.branch[static_cast<std::size_t>(kK5Edges[i].first)];
        const auto& b = s.branch[static_cast<std::size_t>(kK5Edges[i].second)];
        const std::string label = "path " + std::to_string(i);
        if (p.size() < 2) return label + " is too short";
        if (!((p.front() == a && p.back() == b) || (p.front() == b && p.back() == a))) {
            return label + " does not join its branch vertices";
        }
        for (const auto& v : p) {
            if (!g.contains(v)) return label + " leaves the graph at '" + v + "'";
        }
        if (!is_path_in(g, p)) return label + " is not a path of the graph";
        for (std::size_t k = 1; k + 1 < p.size(); ++k) {
            if (branch.count(p[k])) return label + " passes through branch vertex '" + p[k] + "'";
            if (!interiors.insert(p[k]).second) return label + " shares interior vertex '" + p[k] + "'";
        }
    }
    return {};
}

inline bool is_valid_subdivision(const Graph& g, const Subdivision& s) { return subdivision_defect(g, s).empty(); }

namespace detail {

inline std::vector<std::pair<int, int>> k5_pairs(const std::array<int, 5>& b) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, j] : kK5Edges) pairs.emplace_back(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
    return pairs;
}

inline Subdivision to_subdivision(const Graph& g, const std::array<int, 5>& b, const std::vector<std::vector<int>>& paths) {
    Subdivision s;
    for (std::size_t i = 0; i < 5; ++i) s.branch[i] = g.id(b[i]);
    for (std::size_t i = 0; i < 10; ++i) {
        for (int v : paths[i]) s.paths[i].push_back(g.id(v));
    }
    return s;
}

/// Visits every 5-subset of candidates (lexicographic) that admits a
/// subdivision; the callback returns false to stop.
template <class F>
void for_each_k5(const Graph& g, bool minimize, F&& f) {
    const DenseGraph d = DenseGraph::from(g);
    std::vector<int> cand;
    for (int v = 0; v < d.n; ++v) {
        if (popcount(d.adj[static_cast<std::size_t>(v)]) >= 4) cand.push_back(v);
    }
    const std::size_t m = cand.size();
    if (m < 5) return;
    std::array<std::size_t, 5> c{0, 1, 2, 3, 4};
    while (true) {
        std::array<int, 5> b{};
        Mask blocked = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            b[i] = cand[c[i]];
            blocked |= bit(b[i]);
        }
        auto pairs = k5_pairs(b);
        // longest connections first
        std::vector<std::size_t> order(10);
        for (std::size_t i = 0; i < 10; ++i) order[i] = i;
        const Mask free = d.all() & ~blocked;
        std::array<int, 10> dist{};
        bool dead = false;
        for (std::size_t i = 0; i < 10; ++i) {
            dist[i] = d.adjacent(pairs[i].first, pairs[i].second) ? 1 : distance(d, pairs[i].first, pairs[i].second, free);
            if (dist[i] < 0) dead = true;
        }
        if (!dead) {
            std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return dist[x] > dist[y]; });
            std::vector<std::pair<int, int>> sorted;
            for (std::size_t i : order) sorted.push_back(pairs[i]);
            if (auto found = link(d, sorted, blocked, minimize)) {
                std::vector<std::vector<int>> paths(10);
                for (std::size_t k = 0; k < 10; ++k) paths[order[k]] = (*found)[k];
                if (!f(to_subdivision(g, b, paths))) return;
            }
        }
        // next combination
        int i = 4;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == m - 5 + static_cast<std::size_t>(i)) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < 5; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace detail

/// Exact search. Branch vertices need degree >= 4; adjacent branch vertices
/// are joined by their edge, which loses no generality.
inline std::optional<Subdivision> find_k5_subdivision(const Graph& g, const SearchLimits& limits = {}) {
    require_within(g, limits, "find_k5_subdivision");
    std::optional<Subdivision> out;
    detail::for_each_k5(g, true, [&](Subdivision s) {
        out = std::move(s);
        return false;
    });
    return out;
}

/// One witness per branch set that admits a subdivision, at most `max_count`.
inline std::vector<Subdivision> find_k5_subdivisions(const Graph& g, std::size_t max_count,
                                                     const SearchLimits& limits = {}) {
    require_within(g, limits, "find_k5_subdivisions");
    std::vector<Subdivision> out;
    if (max_count == 0) return out;
    detail::for_each_k5(g, true, [&](Subdivision s) {
        out.push_back(std::move(s));
        return out.size() < max_count;
    });
    return out;
}

/// W together with P1 (w1..w3) and P2 (w2..w4) as a K5-subdivision with branch
/// vertices center, w1, w2, w3, w4.
inline Subdivision wheel_plus_paths_to_k5(const Graph& g, const Wheel& w, const std::array<Vertex, 4>& ws,
                                          const PathSystem& p) {
    if (!is_wheel(g, w)) throw precondition_error("wheel_plus_paths_to_k5: not a wheel of the graph");
    const std::size_t n = w.rim.size();
    std::array<std::size_t, 4> pos{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!w.spokes.count(ws[i])) throw precondition_error("'" + ws[i] + "' is not a spoke of the wheel");
        pos[i] = static_cast<std::size_t>(std::find(w.rim.begin(), w.rim.end(), ws[i]) - w.rim.begin());
        for (std::size_t j = 0; j < i; ++j) {
            if (ws[j] == ws[i]) throw precondition_error("spokes must be distinct");
        }
    }
    auto steps = [&](std::size_t from, std::size_t to, bool forward) {
        return forward ? (to + n - from) % n : (from + n - to) % n;
    };
    // the four spokes must occur in cyclic order, in one direction or the other
    bool forward = true;
    if (steps(pos[0], pos[1], true) + steps(pos[1], pos[2], true) + steps(pos[2], pos[3], true) +
            steps(pos[3], pos[0], true) != n) {
        forward = false;
        if (steps(pos[0], pos[1], false) + steps(pos[1], pos[2], false) + steps(pos[2], pos[3], false) +
                steps(pos[3], pos[0], false) != n) {
            throw precondition_error("spokes are not in cyclic order on the rim");
        }
    }
    auto rim_arc = [&](std::size_t a, std::size_t b) {
        std::vector<Vertex> out;
        for (std::size_t k = a;; k = forward ? (k + 1) % n : (k + n - 1) % n) {
            out.push_back(w.rim[k]);
            if (k == b) break;
        }
        return out;
    };
    if (p.paths.size() != 2) throw construction_error("expected exactly two cross paths");
    auto oriented = [&](std::size_t i, const Vertex& from, const Vertex& to) {
        auto path = p.paths[i];
        if (path.empty()) throw construction_error("cross path " + std::to_string(i + 1) + " is empty");
        if (path.front() == to && path.back() == from) std::reverse(path.begin(), path.end());
        if (path.front() != from || path.back() != to) {
            throw construction_error("cross path " + std::to_string(i + 1) + " does not join " + from + " and " + to);
        }
        if (!is_path_in(g, path)) throw construction_error("cross path " + std::to_string(i + 1) + " is not a path of the graph");
        return path;
    };
    const auto p1 = oriented(0, ws[0], ws[2]);
    const auto p2 = oriented(1, ws[1], ws[3]);
    const VertexSet wv = w.vertex_set();
    VertexSet inner1;
    for (std::size_t k = 1; k + 1 < p1.size(); ++k) {
        if (wv.count(p1[k])) throw construction_error("cross path 1 meets the wheel at '" + p1[k] + "'");
        inner1.insert(p1[k]);
    }
    for (std::size_t k = 1; k + 1 < p2.size(); ++k) {
        if (wv.count(p2[k])) throw construction_error("cross path 2 meets the wheel at '" + p2[k] + "'");
        if (inner1.count(p2[k])) throw construction_error("cross paths share vertex '" + p2[k] + "'");
    }

    Subdivision s;
    s.branch = {w.center, ws[0], ws[1], ws[2], ws[3]};
    for (std::size_t i = 0; i < 4; ++i) s.paths[i] = {w.center, ws[i]};
    s.paths[4] = rim_arc(pos[0], pos[1]);
    s.paths[5] = p1;
    s.paths[6] = rim_arc(pos[3], pos[0]);
    std::reverse(s.paths[6].begin(), s.paths[6].end());
    s.paths[7] = rim_arc(pos[1], pos[2]);
    s.paths[8] = p2;
    s.paths[9] = rim_arc(pos[2], pos[3]);
    if (auto defect = subdivision_defect(g, s); !defect.empty()) throw construction_error(defect);
    return s;
}

}  // namespace wheels
