#pragma once

// Bitmask adjacency used by the exhaustive search kernels (at most 64 vertices).

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wheels/error.hpp"
#include "wheels/graph.hpp"

namespace wheels {

using Mask = std::uint64_t;

inline constexpr std::size_t kDenseCapacity = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Calls f(i) for every set bit i in ascending order.
template <class F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        const int i = lowest(m);
        m &= m - 1;
        f(i);
    }
}

/// Resource bounds for the exhaustive searches. The defaults mirror the
/// desk-scale regime the toolkit is validated on.
struct SearchLimits {
    std::size_t max_vertices = 12;
};

inline void require_within(const Graph& g, const SearchLimits& limits, std::string_view what) {
    if (g.vertex_count() > limits.max_vertices || g.vertex_count() > kDenseCapacity) {
        throw resource_limit_error(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                                   " vertices, bound is " + std::to_string(limits.max_vertices));
    }
}

struct DenseGraph {
    int n = 0;
    std::vector<Mask> adj;

    static DenseGraph from(const Graph& g) {
        if (g.vertex_count() > kDenseCapacity) {
            throw resource_limit_error("dense kernels support at most 64 vertices");
        }
        DenseGraph d;
        d.n = static_cast<int>(g.vertex_count());
        d.adj.assign(static_cast<std::size_t>(d.n), 0);
        for (auto [a, b] : g.index_edges()) {
            d.adj[a] |= bit(b);
            d.adj[b] |= bit(a);
        }
        return d;
    }

    Mask all() const { return full_mask(n); }
    bool adjacent(int a, int b) const { return (adj[a] >> b) & 1U; }
};

/// Vertices reachable from `from` moving only through `open` (from itself is
/// always included).
inline Mask reach(const DenseGraph& g, int from, Mask open) {
    Mask seen = bit(from);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int x) { next |= g.adj[x]; });
        next &= open & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// BFS distance from s to t where intermediate vertices must lie in `open`;
/// -1 if unreachable.
inline int distance(const DenseGraph& g, int s, int t, Mask open) {
    if (s == t) return 0;
    Mask seen = bit(s);
    Mask frontier = seen;
    for (int d = 1; frontier; ++d) {
        Mask next = 0;
        for_each_bit(frontier, [&](int x) { next |= g.adj[x]; });
        if (next & bit(t)) return d;
        next &= open & ~seen;
        seen |= next;
        frontier = next;
    }
    return -1;
}

}  // namespace wheels
