#pragma once

// Simple undirected graphs over opaque string vertex ids, plus the surgery
// operations (delete, add, identify) and cycle arcs used throughout.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wheels/error.hpp"

namespace wheels {

using Vertex = std::string;

/// Numeric-aware ordering: "v2" < "v10", "9" < "10". Falls back to plain
/// string comparison so that distinct ids never compare equivalent.
inline bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            std::string_view ra = a.substr(i, ei - i), rb = b.substr(j, ej - j);
            while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
            while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            i = ei;
            j = ej;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

struct NaturalLess {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

using VertexSet = std::set<Vertex, NaturalLess>;

/// Unordered pair of distinct vertices, stored with u < v in natural order.
struct Edge {
    Vertex u;
    Vertex v;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::move(a)), v(std::move(b)) {
        if (u == v) throw input_error("self-loop at vertex '" + u + "'");
        if (natural_less(v, u)) std::swap(u, v);
    }

    bool touches(std::string_view x) const { return u == x || v == x; }
    const Vertex& other(std::string_view x) const { return u == x ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.u != b.u) return natural_less(a.u, b.u);
        return natural_less(a.v, b.v);
    }
};

using EdgeSet = std::set<Edge>;

/// Argument of the deletion surgery: a vertex set and a set of vertex pairs.
struct VertexEdgeSet {
    VertexSet vertices;
    EdgeSet edges;
};

/// Immutable simple graph. Vertices are kept in natural order and adjacency
/// lists are sorted, so equal graphs have identical internal layout.
class Graph {
public:
    Graph() = default;

    Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
        std::sort(vertices.begin(), vertices.end(), NaturalLess{});
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            if (vertices[i] == vertices[i - 1]) throw input_error("duplicate vertex id '" + vertices[i] + "'");
        }
        ids_ = std::move(vertices);
        adj_.assign(ids_.size(), {});
        for (const Edge& e : edges) {
            const int a = index(e.u);
            const int b = index(e.v);
            if (std::binary_search(adj_[a].begin(), adj_[a].end(), b)) {
                throw input_error("duplicate edge " + e.u + "-" + e.v);
            }
            adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
            adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
            ++edge_count_;
        }
    }

    /// Vertices "0".."n-1" with edges given by index pairs.
    static Graph with_indices(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<Vertex> ids;
        ids.reserve(n);
        for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
        std::vector<Edge> es;
        es.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
                throw input_error("edge endpoint out of range");
            }
            es.emplace_back(std::to_string(a), std::to_string(b));
        }
        return Graph(std::move(ids), es);
    }

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return ids_.empty(); }

    const std::vector<Vertex>& vertices() const { return ids_; }
    const Vertex& id(int i) const { return ids_.at(static_cast<std::size_t>(i)); }

    std::optional<int> find(std::string_view v) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v, NaturalLess{});
        if (it == ids_.end() || *it != v) return std::nullopt;
        return static_cast<int>(it - ids_.begin());
    }

    int index(std::string_view v) const {
        if (auto i = find(v)) return *i;
        throw input_error("unknown vertex '" + std::string(v) + "'");
    }

    bool contains(std::string_view v) const { return find(v).has_value(); }

    bool adjacent(int a, int b) const {
        const auto& row = adj_.at(static_cast<std::size_t>(a));
        return std::binary_search(row.begin(), row.end(), b);
    }

    bool adjacent(std::string_view a, std::string_view b) const {
        auto i = find(a);
        auto j = find(b);
        return i && j && adjacent(*i, *j);
    }

    std::span<const int> neighbors(int i) const { return adj_.at(static_cast<std::size_t>(i)); }

    std::vector<Vertex> neighbors(std::string_view v) const {
        std::vector<Vertex> out;
        for (int j : adj_[static_cast<std::size_t>(index(v))]) out.push_back(ids_[static_cast<std::size_t>(j)]);
        return out;
    }

    std::size_t degree(int i) const { return adj_.at(static_cast<std::size_t>(i)).size(); }
    std::size_t degree(std::string_view v) const { return degree(index(v)); }

    /// Edges as index pairs (a < b), lexicographically sorted.
    std::vector<std::pair<int, int>> index_edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (std::size_t a = 0; a < adj_.size(); ++a) {
            for (int b : adj_[a]) {
                if (static_cast<int>(a) < b) out.emplace_back(static_cast<int>(a), b);
            }
        }
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (auto [a, b] : index_edges()) out.emplace_back(ids_[a], ids_[b]);
        return out;
    }

    /// Subgraph induced by `keep`; ids outside the graph are an input error.
    Graph induced(const VertexSet& keep) const {
        for (const auto& v : keep) index(v);
        std::vector<Edge> es;
        for (auto [a, b] : index_edges()) {
            if (keep.count(ids_[a]) && keep.count(ids_[b])) es.emplace_back(ids_[a], ids_[b]);
        }
        return Graph(std::vector<Vertex>(keep.begin(), keep.end()), es);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Vertex> ids_;
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

/// G - (S u T): drop the vertices of S, then the pairs of T from what remains.
inline Graph remove(const Graph& g, const VertexEdgeSet& arg) {
    for (const auto& v : arg.vertices) g.index(v);
    for (const auto& e : arg.edges) {
        g.index(e.u);
        g.index(e.v);
        if (arg.vertices.count(e.u) || arg.vertices.count(e.v)) {
            throw input_error("removed pair " + e.u + "-" + e.v + " touches a removed vertex");
        }
    }
    std::vector<Vertex> keep;
    for (const auto& v : g.vertices()) {
        if (!arg.vertices.count(v)) keep.push_back(v);
    }
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (arg.vertices.count(e.u) || arg.vertices.count(e.v)) continue;
        if (arg.edges.count(e)) continue;
        es.push_back(e);
    }
    return Graph(std::move(keep), es);
}

inline Graph remove_vertices(const Graph& g, const VertexSet& vs) { return remove(g, VertexEdgeSet{vs, {}}); }

/// G + (S u T): new vertices must be fresh, new edges must not already exist.
inline Graph add(const Graph& g, const VertexSet& new_vertices, const EdgeSet& new_edges) {
    for (const auto& v : new_vertices) {
        if (g.contains(v)) throw input_error("vertex id '" + v + "' already present");
    }
    for (const Edge& e : new_edges) {
        const bool ku = g.contains(e.u) || new_vertices.count(e.u);
        const bool kv = g.contains(e.v) || new_vertices.count(e.v);
        if (!ku || !kv) throw input_error("new edge " + e.u + "-" + e.v + " has an unknown endpoint");
        if (g.adjacent(e.u, e.v)) throw input_error("edge " + e.u + "-" + e.v + " already present");
    }
    std::vector<Vertex> vs = g.vertices();
    vs.insert(vs.end(), new_vertices.begin(), new_vertices.end());
    std::vector<Edge> es = g.edges();
    es.insert(es.end(), new_edges.begin(), new_edges.end());
    return Graph(std::move(vs), es);
}

/// Merge u and w into `name`, adjacent to N(u) u N(w) minus {u, w}. Parallel
/// edges collapse. `name` may reuse u or w, otherwise it must be fresh.
inline Graph identify(const Graph& g, std::string_view u, std::string_view w, const Vertex& name) {
    if (u == w) throw input_error("identify needs two distinct vertices");
    g.index(u);
    g.index(w);
    if (g.contains(name) && name != u && name != w) {
        throw input_error("identified vertex name '" + name + "' clashes with an existing vertex");
    }
    VertexSet merged_nbrs;
    for (const auto& x : g.neighbors(u)) merged_nbrs.insert(x);
    for (const auto& x : g.neighbors(w)) merged_nbrs.insert(x);
    merged_nbrs.erase(std::string(u));
    merged_nbrs.erase(std::string(w));

    std::vector<Vertex> vs;
    for (const auto& v : g.vertices()) {
        if (v != u && v != w) vs.push_back(v);
    }
    vs.push_back(name);
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (e.touches(u) || e.touches(w)) continue;
        es.push_back(e);
    }
    for (const auto& x : merged_nbrs) es.emplace_back(name, x);
    return Graph(std::move(vs), es);
}

/// A cyclic vertex sequence with its stored (clockwise) orientation and two
/// marked vertices on it.
struct CycleArc {
    std::vector<Vertex> cycle;
    Vertex u;
    Vertex v;
};

/// uCv: the single vertex when u = v, otherwise the subpath from u to v
/// following the stored orientation.
inline std::vector<Vertex> arc(const CycleArc& c) {
    auto pos = [&](const Vertex& x) {
        auto it = std::find(c.cycle.begin(), c.cycle.end(), x);
        if (it == c.cycle.end()) throw input_error("vertex '" + x + "' is not on the cycle");
        return static_cast<std::size_t>(it - c.cycle.begin());
    };
    const std::size_t a = pos(c.u);
    const std::size_t b = pos(c.v);
    std::vector<Vertex> out;
    for (std::size_t i = a;; i = (i + 1) % c.cycle.size()) {
        out.push_back(c.cycle[i]);
        if (i == b) break;
    }
    return out;
}

/// True iff `cycle` lists >= 3 distinct vertices of g, consecutive ones
/// (cyclically) adjacent.
inline bool is_cycle_in(const Graph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) return false;
    VertexSet seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

/// True iff `path` is a nonempty sequence of distinct vertices with
/// consecutive ones adjacent in g.
inline bool is_path_in(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) return false;
    VertexSet seen(path.begin(), path.end());
    if (seen.size() != path.size()) return false;
    for (const auto& v : path) {
        if (!g.contains(v)) return false;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    return true;
}

/// Union of two graphs (vertex and edge sets).
inline Graph graph_union(const Graph& a, const Graph& b) {
    VertexSet vs(a.vertices().begin(), a.vertices().end());
    vs.insert(b.vertices().begin(), b.vertices().end());
    EdgeSet es;
    for (const auto& e : a.edges()) es.insert(e);
    for (const auto& e : b.edges()) es.insert(e);
    return Graph(std::vector<Vertex>(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));
}

/// Connected components as index lists, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int y : g.neighbors(x)) {
                if (comp[y] < 0) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Handy constructors for common test graphs.
namespace make {

inline Graph cycle(std::size_t n, std::string_view prefix = "") {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(std::string(prefix) + std::to_string(i + (prefix.empty() ? 0 : 1)));
    for (std::size_t i = 0; i < n; ++i) es.emplace_back(vs[i], vs[(i + 1) % n]);
    return Graph(vs, es);
}

inline Graph path(std::size_t n, std::string_view prefix = "") {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(std::string(prefix) + std::to_string(i + (prefix.empty() ? 0 : 1)));
    for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(vs[i], vs[i + 1]);
    return Graph(vs, es);
}

inline Graph complete(std::size_t n, std::string_view prefix = "") {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(std::string(prefix) + std::to_string(i + (prefix.empty() ? 0 : 1)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(vs[i], vs[j]);
    return Graph(vs, es);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < a; ++i) vs.push_back("a" + std::to_string(i + 1));
    for (std::size_t j = 0; j < b; ++j) vs.push_back("b" + std::to_string(j + 1));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) es.emplace_back("a" + std::to_string(i + 1), "b" + std::to_string(j + 1));
    return Graph(vs, es);
}

/// Cycle c1..cn plus center "w" joined to every rim vertex.
inline Graph wheel(std::size_t n) {
    Graph rim = cycle(n, "c");
    VertexSet center{"w"};
    EdgeSet spokes;
    for (const auto& v : rim.vertices()) spokes.emplace("w", v);
    return add(rim, center, spokes);
}

inline Graph petersen() {
    return Graph::with_indices(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Graph octahedron() {
    return Graph::with_indices(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4},
                                   {1, 2}, {2, 3}, {3, 4}, {4, 1}});
}

inline Graph icosahedron() {
    // top 0, upper ring 1..5, lower ring 6..10, bottom 11
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        const int up = 1 + i, upn = 1 + (i + 1) % 5;
        const int lo = 6 + i, lon = 6 + (i + 1) % 5;
        es.emplace_back(0, up);
        es.emplace_back(up, upn);
        es.emplace_back(up, lo);
        es.emplace_back(upn, lo);
        es.emplace_back(lo, lon);
        es.emplace_back(lo, 11);
    }
    return Graph::with_indices(12, es);
}

inline Graph grid(std::size_t rows, std::size_t cols) {
    std::vector<std::pair<int, int>> es;
    auto at = [cols](std::size_t r, std::size_t c) { return static_cast<int>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.emplace_back(at(r, c), at(r, c + 1));
            if (r + 1 < rows) es.emplace_back(at(r, c), at(r + 1, c));
        }
    return Graph::with_indices(rows * cols, es);
}

}  // namespace make

}  // namespace wheels
