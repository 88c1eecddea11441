#pragma once

// Exact search for internally disjoint path systems (linkages).
//
// Paths may share endpoints only where the pair list says so. No path may
// pass through an endpoint of any pair or through a forbidden vertex.

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "wheels/dense.hpp"
#include "wheels/error.hpp"
#include "wheels/graph.hpp"

namespace wheels {

struct PathSystem {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::vector<Vertex>> paths;
};

/// Checks every PathSystem invariant against g.
inline bool is_valid_path_system(const Graph& g, const PathSystem& ps, const VertexSet& forbidden = {}) {
    if (ps.pairs.size() != ps.paths.size()) return false;
    VertexSet endpoints;
    for (const auto& [s, t] : ps.pairs) {
        endpoints.insert(s);
        endpoints.insert(t);
    }
    VertexSet interiors;
    for (std::size_t i = 0; i < ps.paths.size(); ++i) {
        const auto& p = ps.paths[i];
        if (p.size() < 2 || p.front() != ps.pairs[i].first || p.back() != ps.pairs[i].second) return false;
        if (!is_path_in(g, p)) return false;
        for (std::size_t k = 1; k + 1 < p.size(); ++k) {
            if (endpoints.count(p[k]) || forbidden.count(p[k])) return false;
            if (!interiors.insert(p[k]).second) return false;
        }
    }
    return true;
}

struct LinkageOptions {
    SearchLimits limits;
    bool minimize = true;  // smallest total length, via iterative deepening
};

namespace detail {

class LinkageSearch {
public:
    LinkageSearch(const DenseGraph& g, std::vector<std::pair<int, int>> pairs, Mask blocked)
        : g_(g), pairs_(std::move(pairs)), blocked_(blocked) {}

    /// Solves with a bound on the total number of interior vertices (-1: none).
    std::optional<std::vector<std::vector<int>>> solve(int budget) {
        budget_ = budget;
        paths_.assign(pairs_.size(), {});
        if (route(0, 0, 0)) return paths_;
        return std::nullopt;
    }

    /// Lower bound on total interior vertices with nothing routed yet.
    int lower_bound() const {
        int lb = 0;
        const Mask free = g_.all() & ~blocked_;
        for (auto [s, t] : pairs_) {
            if (g_.adjacent(s, t)) continue;
            const int d = distance(g_, s, t, free);
            if (d < 0) return -1;
            lb += d - 1;
        }
        return lb;
    }

private:
    bool feasible(std::size_t from, Mask used, int spent) const {
        const Mask free = g_.all() & ~blocked_ & ~used;
        int needing = 0;
        int lb = 0;
        for (std::size_t j = from; j < pairs_.size(); ++j) {
            auto [s, t] = pairs_[j];
            if (g_.adjacent(s, t)) continue;
            ++needing;
            if (budget_ < 0) {
                if (!(reach(g_, s, free) & g_.adj[static_cast<std::size_t>(t)])) return false;
            } else {
                const int d = distance(g_, s, t, free);
                if (d < 0) return false;
                lb += d - 1;
            }
        }
        if (needing > popcount(free)) return false;
        return budget_ < 0 || spent + lb <= budget_;
    }

    bool route(std::size_t i, Mask used, int spent) {
        if (i == pairs_.size()) return true;
        if (!feasible(i, used, spent)) return false;
        auto [s, t] = pairs_[i];
        if (g_.adjacent(s, t)) {
            paths_[i] = {s, t};
            return route(i + 1, used, spent);
        }
        paths_[i] = {s};
        return extend(i, s, t, used, spent);
    }

    bool extend(std::size_t i, int cur, int t, Mask used, int spent) {
        if (cur != paths_[i].front() && g_.adjacent(cur, t)) {
            paths_[i].push_back(t);
            if (route(i + 1, used, spent)) return true;
            paths_[i].pop_back();
        }
        if (budget_ >= 0 && spent >= budget_) return false;
        const Mask free = g_.all() & ~blocked_ & ~used;
        bool found = false;
        Mask options = g_.adj[static_cast<std::size_t>(cur)] & free;
        while (options && !found) {
            const int x = lowest(options);
            options &= options - 1;
            const Mask rest = free & ~bit(x);
            if (!g_.adjacent(x, t) && !(reach(g_, x, rest) & g_.adj[static_cast<std::size_t>(t)])) continue;
            paths_[i].push_back(x);
            found = extend(i, x, t, used | bit(x), spent + 1);
            if (!found) paths_[i].pop_back();
        }
        return found;
    }

    const DenseGraph& g_;
    std::vector<std::pair<int, int>> pairs_;
    Mask blocked_;
    int budget_ = -1;
    std::vector<std::vector<int>> paths_;
};

/// Index-level linkage: pairs are routed in the given order.
inline std::optional<std::vector<std::vector<int>>> link(const DenseGraph& g, const std::vector<std::pair<int, int>>& pairs,
                                                         Mask blocked, bool minimize) {
    LinkageSearch search(g, pairs, blocked);
    const int lb = search.lower_bound();
    if (lb < 0) return std::nullopt;
    auto any = search.solve(-1);
    if (!any || !minimize) return any;
    int total = 0;
    for (const auto& p : *any) total += static_cast<int>(p.size()) - 2;
    for (int budget = lb; budget < total; ++budget) {
        if (auto better = search.solve(budget)) return better;
    }
    return any;
}

}  // namespace detail

/// Exact linkage search: internally disjoint paths joining each pair, with
/// interiors avoiding all pair endpoints and `forbidden`.
inline std::optional<PathSystem> find_disjoint_paths(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                                     const VertexSet& forbidden = {}, const LinkageOptions& opts = {}) {
    require_within(g, opts.limits, "find_disjoint_paths");
    const DenseGraph d = DenseGraph::from(g);
    Mask blocked = 0;
    for (const auto& f : forbidden) blocked |= bit(g.index(f));
    std::vector<std::pair<int, int>> idx;
    EdgeSet seen;
    for (const auto& [s, t] : pairs) {
        if (s == t) throw input_error("linkage pair with identical endpoints");
        if (forbidden.count(s) || forbidden.count(t)) throw input_error("linkage endpoint is forbidden");
        if (!seen.emplace(s, t).second) throw input_error("linkage pair listed twice");
        idx.emplace_back(g.index(s), g.index(t));
        blocked |= bit(idx.back().first) | bit(idx.back().second);
    }
    // shorter connections first; ties by vertex order
    std::vector<std::size_t> order(idx.size());
    std::iota(order.begin(), order.end(), 0);
    const Mask free = d.all() & ~blocked;
    std::vector<int> dist(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto [s, t] = idx[i];
        dist[i] = d.adjacent(s, t) ? 1 : distance(d, s, t, free);
        if (dist[i] < 0) return std::nullopt;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        return idx[a] < idx[b];
    });
    std::vector<std::pair<int, int>> sorted;
    for (std::size_t i : order) sorted.push_back(idx[i]);
    auto found = detail::link(d, sorted, blocked, opts.minimize);
    if (!found) return std::nullopt;
    PathSystem ps;
    ps.pairs = pairs;
    ps.paths.resize(pairs.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (int v : (*found)[k]) ps.paths[order[k]].push_back(g.id(v));
    }
    return ps;
}

}  // namespace wheels
