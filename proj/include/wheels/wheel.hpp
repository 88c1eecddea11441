#pragma once

// Wheels, the S-good predicate, and the exhaustive good-wheel search.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "wheels/dense.hpp"
#include "wheels/error.hpp"
#include "wheels/graph.hpp"
#include "wheels/planarity.hpp"
#include "wheels/terminal_graph.hpp"

namespace wheels {

struct Wheel {
    Vertex center;
    std::vector<Vertex> rim;
    VertexSet spokes;

    VertexSet vertex_set() const {
        VertexSet out(rim.begin(), rim.end());
        out.insert(center);
        return out;
    }

    bool operator==(const Wheel&) const = default;
};

inline bool is_wheel(const Graph& g, const Wheel& w) {
    if (!g.contains(w.center) || w.rim.size() < 3 || w.spokes.size() < 3) return false;
    if (std::find(w.rim.begin(), w.rim.end(), w.center) != w.rim.end()) return false;
    for (const auto& v : w.rim) {
        if (!g.contains(v)) return false;
    }
    if (!is_cycle_in(g, w.rim)) return false;
    for (const auto& s : w.spokes) {
        if (std::find(w.rim.begin(), w.rim.end(), s) == w.rim.end()) return false;
        if (!g.adjacent(w.center, s)) return false;
    }
    return true;
}

/// S ∩ V(W) ⊆ N_G(center). Only G-adjacency is required, not that the edge is a spoke of W.
inline bool is_s_good(const Graph& g, const Wheel& w, const VertexSet& s) {
    if (s.count(w.center)) throw input_error("S-goodness is undefined for a wheel centered at a terminal");
    for (const auto& v : w.rim) {
        if (s.count(v) && !g.adjacent(w.center, v)) return false;
    }
    return true;
}

namespace detail {

/// Shortest cycle inside `allowed` meeting `hubs` at least three times; DFS
/// order breaks ties. Cycles are rooted at their smallest vertex.
class RimSearch {
public:
    RimSearch(const DenseGraph& g, Mask allowed, Mask hubs) : g_(g), allowed_(allowed), hubs_(hubs) {}

    std::optional<std::vector<int>> run() {
        for_each_bit(allowed_, [&](int s) {
            root_ = s;
            // vertices above the root only, and the root must lie in a cycle with >= 3 hubs overall
            const Mask open = allowed_ & ~full_mask(s + 1);
            if (popcount((open | bit(s)) & hubs_) < 3) return;
            path_ = {s};
            extend(s, open, (hubs_ >> s) & 1U ? 1 : 0);
        });
        return best_;
    }

private:
    void extend(int cur, Mask open, int hits) {
        const std::size_t len = path_.size();
        if (best_ && len >= best_->size()) return;
        if (len >= 3 && hits >= 3 && g_.adjacent(cur, root_) && path_[1] < cur) {
            best_ = path_;
            return;
        }
        if (hits + popcount(open & hubs_) < 3) return;
        for_each_bit(g_.adj[cur] & open, [&](int x) {
            // x must still be able to return to the root
            const Mask rest = open & ~bit(x);
            if (!(reach(g_, x, rest) & g_.adj[root_]) && !g_.adjacent(x, root_)) return;
            path_.push_back(x);
            extend(x, rest, hits + ((hubs_ >> x) & 1U ? 1 : 0));
            path_.pop_back();
        });
    }

    const DenseGraph& g_;
    Mask allowed_;
    Mask hubs_;
    int root_ = 0;
    std::vector<int> path_;
    std::optional<std::vector<int>> best_;
};

}  // namespace detail

/// Exhaustive search for an S-good wheel with center outside S. Centers are
/// tried by descending degree, and for each the shortest suitable rim.
inline std::optional<Wheel> find_s_good_wheel(const TerminalGraph& tg, const SearchLimits& limits = {}) {
    const Graph& g = tg.graph();
    require_within(g, limits, "find_s_good_wheel");
    const DenseGraph d = DenseGraph::from(g);
    Mask terminals = 0;
    for (const auto& t : tg.terminals()) terminals |= bit(g.index(t));

    std::vector<int> centers(static_cast<std::size_t>(d.n));
    std::iota(centers.begin(), centers.end(), 0);
    std::stable_sort(centers.begin(), centers.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int c : centers) {
        if ((terminals >> c) & 1U) continue;
        const Mask nbrs = d.adj[static_cast<std::size_t>(c)];
        if (popcount(nbrs) < 3) continue;
        const Mask allowed = d.all() & ~bit(c) & ~(terminals & ~nbrs);
        auto rim = detail::RimSearch(d, allowed, nbrs).run();
        if (!rim) continue;
        Wheel w;
        w.center = g.id(c);
        for (int v : *rim) {
            w.rim.push_back(g.id(v));
            if (d.adjacent(c, v)) w.spokes.insert(g.id(v));
        }
        return w;
    }
    return std::nullopt;
}

/// The wheel formed by x and everything cofacial with it, if that closure is
/// x plus a single cycle through at least three of its neighbors.
inline std::optional<Wheel> wheel_from_cofacial(const Embedding& e, std::string_view x) {
    const Graph closure = cofacial_closure(e, x);
    const Graph link = remove_vertices(closure, VertexSet{std::string(x)});
    if (link.vertex_count() < 3 || !is_connected(link)) return std::nullopt;
    for (std::size_t i = 0; i < link.vertex_count(); ++i) {
        if (link.degree(static_cast<int>(i)) != 2) return std::nullopt;
    }
    Wheel w;
    w.center = std::string(x);
    int prev = -1, cur = 0;
    for (std::size_t k = 0; k < link.vertex_count(); ++k) {
        w.rim.push_back(link.id(cur));
        auto nb = link.neighbors(cur);
        const int next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
    }
    for (const auto& v : w.rim) {
        if (closure.adjacent(x, v)) w.spokes.insert(v);
    }
    if (!is_wheel(e.graph, w)) return std::nullopt;
    return w;
}

}  // namespace wheels
