#pragma once

// Exact 4-coloring and precolored extension. Colors are the integers 1..4.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheels/dense.hpp"
#include "wheels/error.hpp"
#include "wheels/graph.hpp"

namespace wheels {

using Coloring = std::map<Vertex, int, NaturalLess>;

inline constexpr int kColors = 4;

/// Coloring is search-cheap, so its default bound is the dense capacity.
inline constexpr SearchLimits kColoringLimits{kDenseCapacity};

/// Proper on its domain, colors in range, every colored vertex in g.
inline bool is_proper(const Graph& g, const Coloring& c) {
    for (const auto& [v, col] : c) {
        if (col < 1 || col > kColors || !g.contains(v)) return false;
    }
    for (const auto& e : g.edges()) {
        auto a = c.find(e.u);
        auto b = c.find(e.v);
        if (a != c.end() && b != c.end() && a->second == b->second) return false;
    }
    return true;
}

inline bool is_total(const Graph& g, const Coloring& c) {
    for (const auto& v : g.vertices()) {
        if (!c.count(v)) return false;
    }
    return true;
}

namespace detail {

/// DSATUR-ordered backtracking: always branch on the vertex with the fewest
/// remaining colors; a vertex with none fails immediately.
class ColorSearch {
public:
    explicit ColorSearch(const DenseGraph& g) : g_(g), color_(static_cast<std::size_t>(g.n), 0) {}

    bool run() { return step(g_.all()); }
    const std::vector<int>& colors() const { return color_; }

private:
    int available(int v) const {
        int seen = 0;
        for_each_bit(g_.adj[static_cast<std::size_t>(v)], [&](int w) {
            if (color_[static_cast<std::size_t>(w)]) seen |= 1 << (color_[static_cast<std::size_t>(w)] - 1);
        });
        return ~seen & ((1 << kColors) - 1);
    }

    bool step(Mask open) {
        if (!open) return true;
        int best = -1, best_avail = 0, best_count = kColors + 1, best_deg = -1;
        for_each_bit(open, [&](int v) {
            const int a = available(v);
            const int cnt = std::popcount(static_cast<unsigned>(a));
            const int deg = popcount(g_.adj[static_cast<std::size_t>(v)] & open);
            if (cnt < best_count || (cnt == best_count && deg > best_deg)) {
                best = v;
                best_avail = a;
                best_count = cnt;
                best_deg = deg;
            }
        });
        if (best_count == 0) return false;
        // colors beyond the first unused one are symmetric
        int max_used = 0;
        for (int c : color_) max_used = std::max(max_used, c);
        for (int c = 1; c <= kColors && c <= max_used + 1; ++c) {
            if (!((best_avail >> (c - 1)) & 1)) continue;
            color_[static_cast<std::size_t>(best)] = c;
            if (step(open & ~bit(best))) return true;
        }
        color_[static_cast<std::size_t>(best)] = 0;
        return false;
    }

    const DenseGraph& g_;
    std::vector<int> color_;
};

}  // namespace detail

/// A proper total 4-coloring, or none.
inline std::optional<Coloring> four_color(const Graph& g, const SearchLimits& limits = kColoringLimits) {
    require_within(g, limits, "four_color");
    const DenseGraph d = DenseGraph::from(g);
    detail::ColorSearch search(d);
    if (!search.run()) return std::nullopt;
    Coloring out;
    for (int v = 0; v < d.n; ++v) out[g.id(v)] = search.colors()[static_cast<std::size_t>(v)];
    return out;
}

/// Least color of 1..4 not used on a colored neighbor of v, or 0.
inline int least_available(const Graph& g, const Coloring& c, std::string_view v) {
    int seen = 0;
    for (int w : g.neighbors(g.index(v))) {
        auto it = c.find(g.id(w));
        if (it != c.end()) seen |= 1 << (it->second - 1);
    }
    for (int col = 1; col <= kColors; ++col) {
        if (!((seen >> (col - 1)) & 1)) return col;
    }
    return 0;
}

/// Colors `order` one by one with the least available color. The order must
/// list exactly the uncolored vertices.
inline std::optional<Coloring> extend_greedy(const Graph& g, const Coloring& base, const std::vector<Vertex>& order) {
    if (!is_proper(g, base)) throw input_error("extend_greedy: base coloring is not proper");
    VertexSet listed;
    for (const auto& v : order) {
        if (!g.contains(v)) throw input_error("extend_greedy: unknown vertex '" + v + "'");
        if (base.count(v)) throw input_error("extend_greedy: '" + v + "' is already colored");
        if (!listed.insert(v).second) throw input_error("extend_greedy: '" + v + "' listed twice");
    }
    for (const auto& v : g.vertices()) {
        if (!base.count(v) && !listed.count(v)) throw input_error("extend_greedy: '" + v + "' is left uncolored");
    }
    Coloring out = base;
    for (const auto& v : order) {
        const int col = least_available(g, out, v);
        if (col == 0) return std::nullopt;
        out[v] = col;
    }
    return out;
}

/// Applies the forced colors, then extend_greedy over `order`.
inline std::optional<Coloring> assign_then_extend(const Graph& g, const Coloring& base, const Coloring& forced,
                                                  const std::vector<Vertex>& order) {
    Coloring merged = base;
    for (const auto& [v, col] : forced) {
        if (base.count(v)) throw input_error("assign_then_extend: '" + v + "' is already colored");
        merged[v] = col;
    }
    if (!is_proper(g, merged)) throw input_error("assign_then_extend: forced colors are not proper");
    auto out = extend_greedy(g, merged, order);
    if (out && !is_proper(g, *out)) throw construction_error("assign_then_extend produced an improper coloring");
    return out;
}

}  // namespace wheels
