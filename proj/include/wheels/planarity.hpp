#pragma once

// Planarity, combinatorial embeddings, and disc-planarity of terminal graphs.
//
// Faces are traced with the rule: after the dart (u -> v) comes
// (v -> successor of u in the rotation at v). Every face lies on the same
// side of its darts; we call that side "left" and the induced direction of
// an outer cycle "clockwise".

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "wheels/error.hpp"
#include "wheels/graph.hpp"
#include "wheels/terminal_graph.hpp"

namespace wheels {

/// Rotation system plus its traced boundary walks. An isolated vertex
/// contributes the one-vertex walk [v].
struct Embedding {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces;
    std::size_t outer_face = 0;

    /// Faces of the plane drawing: boundary walks of different components
    /// share the unbounded face.
    std::size_t face_count() const {
        const std::size_t c = components(graph).size();
        return c == 0 ? 1 : faces.size() - (c - 1);
    }

    std::vector<Vertex> face_vertices(std::size_t f) const {
        std::vector<Vertex> out;
        for (int i : faces.at(f)) out.push_back(graph.id(i));
        return out;
    }
};

namespace detail {

/// Boundary walks of the rotation restricted to vertices with member[v].
inline std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rotation,
                                                 const std::vector<bool>& member) {
    const std::size_t n = rotation.size();
    std::vector<std::vector<int>> rot(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!member[v]) continue;
        for (int w : rotation[v]) {
            if (member[static_cast<std::size_t>(w)]) rot[v].push_back(w);
        }
    }
    std::vector<std::vector<char>> used(n);
    for (std::size_t v = 0; v < n; ++v) used[v].assign(rot[v].size(), 0);
    auto pos = [&](int at, int nbr) {
        const auto& r = rot[static_cast<std::size_t>(at)];
        return static_cast<std::size_t>(std::find(r.begin(), r.end(), nbr) - r.begin());
    };
    std::vector<std::vector<int>> walks;
    for (std::size_t v = 0; v < n; ++v) {
        if (!member[v]) continue;
        if (rot[v].empty()) {
            walks.push_back({static_cast<int>(v)});
            continue;
        }
        for (std::size_t i = 0; i < rot[v].size(); ++i) {
            if (used[v][i]) continue;
            std::vector<int> walk;
            int a = static_cast<int>(v);
            std::size_t ai = i;
            while (!used[static_cast<std::size_t>(a)][ai]) {
                used[static_cast<std::size_t>(a)][ai] = 1;
                walk.push_back(a);
                const int b = rot[static_cast<std::size_t>(a)][ai];
                const auto& rb = rot[static_cast<std::size_t>(b)];
                const std::size_t back = pos(b, a);
                ai = (back + 1) % rb.size();
                a = b;
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

/// Index of the walk that traverses the dart (from -> to), or -1.
inline int walk_with_dart(const std::vector<std::vector<int>>& walks, int from, int to) {
    for (std::size_t f = 0; f < walks.size(); ++f) {
        const auto& w = walks[f];
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == from && w[(i + 1) % w.size()] == to && w.size() > 1) return static_cast<int>(f);
        }
    }
    return -1;
}

inline std::optional<std::vector<std::vector<int>>> boyer_myrvold(const Graph& g) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    BGraph bg(g.vertex_count());
    for (auto [a, b] : g.index_edges()) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), bg);
    auto e_index = boost::get(boost::edge_index, bg);
    int count = 0;
    boost::graph_traits<BGraph>::edge_iterator ei, ei_end;
    for (boost::tie(ei, ei_end) = boost::edges(bg); ei != ei_end; ++ei) boost::put(e_index, *ei, count++);

    using Storage = std::vector<std::vector<EdgeDesc>>;
    Storage storage(boost::num_vertices(bg));
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                            boost::boyer_myrvold_params::embedding = embedding);
    if (!planar) return std::nullopt;
    std::vector<std::vector<int>> rotation(g.vertex_count());
    for (std::size_t v = 0; v < storage.size(); ++v) {
        for (const auto& e : storage[v]) {
            const auto s = boost::source(e, bg);
            const auto t = boost::target(e, bg);
            rotation[v].push_back(static_cast<int>(s == v ? t : s));
        }
    }
    return rotation;
}

inline Vertex fresh_id(const Graph& g, const std::string& stem) {
    Vertex id = stem;
    for (int k = 0; g.contains(id); ++k) id = stem + "_" + std::to_string(k);
    return id;
}

inline std::size_t longest_walk(const std::vector<std::vector<int>>& walks) {
    std::size_t best = 0;
    for (std::size_t f = 1; f < walks.size(); ++f) {
        if (walks[f].size() > walks[best].size()) best = f;
    }
    return best;
}

}  // namespace detail

inline bool is_planar(const Graph& g) { return detail::boyer_myrvold(g).has_value(); }

/// Wraps a caller-provided rotation system; each list must be a permutation
/// of the vertex's neighbors.
inline Embedding embedding_from_rotation(const Graph& g, std::vector<std::vector<int>> rotation) {
    if (rotation.size() != g.vertex_count()) throw input_error("rotation system size mismatch");
    for (std::size_t v = 0; v < rotation.size(); ++v) {
        auto sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        auto nb = g.neighbors(static_cast<int>(v));
        if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
            throw input_error("rotation at '" + g.id(static_cast<int>(v)) + "' is not a permutation of its neighbors");
        }
    }
    Embedding e;
    e.graph = g;
    e.rotation = std::move(rotation);
    e.faces = detail::trace_faces(e.rotation, std::vector<bool>(g.vertex_count(), true));
    e.outer_face = e.faces.empty() ? 0 : detail::longest_walk(e.faces);
    return e;
}

/// A planar rotation system of g; the longest boundary walk is marked outer.
inline Embedding embed(const Graph& g) {
    auto rotation = detail::boyer_myrvold(g);
    if (!rotation) throw precondition_error("embed: graph is not planar");
    return embedding_from_rotation(g, std::move(*rotation));
}

/// Genus-zero check of an embedding: V - E + F = 1 + components.
inline bool satisfies_euler(const Embedding& e) {
    const long v = static_cast<long>(e.graph.vertex_count());
    const long m = static_cast<long>(e.graph.edge_count());
    const long f = static_cast<long>(e.face_count());
    const long c = static_cast<long>(components(e.graph).size());
    return v - m + f == 1 + c;
}

/// G plus one fresh vertex adjacent to every terminal.
inline Graph apex_augmentation(const TerminalGraph& tg, Vertex* apex_out = nullptr) {
    const Vertex apex = detail::fresh_id(tg.graph(), "apex");
    EdgeSet es;
    for (const auto& t : tg.terminals()) es.emplace(apex, t);
    if (apex_out) *apex_out = apex;
    return add(tg.graph(), VertexSet{apex}, es);
}

/// G plus a fence pinning the cyclic terminal order: f_i ~ t_i, t_{i+1},
/// f_{i+1}, and a hub adjacent to every f_i. Degenerate pairs for k <= 2
/// are merged.
inline Graph fence_augmentation(const TerminalGraph& tg, Vertex* hub_out = nullptr) {
    const auto& ts = tg.terminals();
    const std::size_t k = ts.size();
    const Vertex hub = detail::fresh_id(tg.graph(), "hub");
    std::vector<Vertex> fence;
    VertexSet fresh{hub};
    for (std::size_t i = 0; i < k; ++i) {
        Vertex f = detail::fresh_id(tg.graph(), "fence" + std::to_string(i));
        fence.push_back(f);
        fresh.insert(f);
    }
    EdgeSet es;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = (i + 1) % k;
        es.emplace(fence[i], ts[i]);
        es.emplace(fence[i], ts[j]);
        if (i != j) es.emplace(fence[i], fence[j]);
        es.emplace(hub, fence[i]);
    }
    if (hub_out) *hub_out = hub;
    return add(tg.graph(), fresh, es);
}

/// Can G be drawn in a closed disc with S on the boundary? Ordered mode also
/// requires S to appear in the given cyclic order.
inline bool is_disc_planar(const TerminalGraph& tg) {
    if (tg.terminals().empty()) throw input_error("disc planarity needs at least one terminal");
    return is_planar(tg.ordered() ? fence_augmentation(tg) : apex_augmentation(tg));
}

namespace detail {

/// Embeds the disc augmentation of tg and returns (augmented graph, rotation,
/// marker vertex index).
struct DiscEmbedding {
    Graph augmented;
    std::vector<std::vector<int>> rotation;
    int marker = -1;
};

inline DiscEmbedding embed_augmented(const TerminalGraph& tg) {
    if (tg.terminals().empty()) throw input_error("disc embedding needs at least one terminal");
    Vertex marker;
    Graph h = tg.ordered() ? fence_augmentation(tg, &marker) : apex_augmentation(tg, &marker);
    auto rotation = boyer_myrvold(h);
    if (!rotation) throw precondition_error("terminal graph is not disc-planar");
    return DiscEmbedding{h, std::move(*rotation), h.index(marker)};
}

/// Within the sub-rotation on `member` vertices of the augmented embedding,
/// the boundary walk of the face that contains the marker's component.
inline std::vector<int> face_toward_marker(const DiscEmbedding& de, const std::vector<bool>& member,
                                           const std::vector<std::vector<int>>& walks) {
    const Graph& h = de.augmented;
    const int n = static_cast<int>(h.vertex_count());
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::vector<int> stack{de.marker};
    reached[static_cast<std::size_t>(de.marker)] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : h.neighbors(x)) {
            if (!reached[static_cast<std::size_t>(y)] && !member[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    for (int d = 0; d < n; ++d) {
        if (!member[static_cast<std::size_t>(d)]) continue;
        const auto& rot = de.rotation[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            if (!reached[static_cast<std::size_t>(rot[i])]) continue;
            // walk backwards from the outside neighbor to the previous member neighbor
            for (std::size_t step = 1; step <= rot.size(); ++step) {
                const int x = rot[(i + rot.size() - step) % rot.size()];
                if (member[static_cast<std::size_t>(x)]) {
                    const int f = walk_with_dart(walks, x, d);
                    if (f >= 0) return walks[static_cast<std::size_t>(f)];
                    break;
                }
            }
            // d has no member neighbors: its trivial walk
            for (const auto& w : walks) {
                if (w.size() == 1 && w[0] == d) return w;
            }
        }
    }
    throw precondition_error("vertex set is not connected to the disc boundary");
}

}  // namespace detail

/// Embedding of G drawn inside the disc; outer_face is the walk along the
/// disc boundary side.
inline Embedding embed_disc(const TerminalGraph& tg) {
    auto de = detail::embed_augmented(tg);
    const Graph& g = tg.graph();
    const Graph& h = de.augmented;
    std::vector<bool> member(h.vertex_count(), false);
    for (const auto& v : g.vertices()) member[static_cast<std::size_t>(h.index(v))] = true;
    const auto walks_h = detail::trace_faces(de.rotation, member);
    const auto outer_h = detail::face_toward_marker(de, member, walks_h);

    // translate the restricted rotation into g's indexing
    std::vector<std::vector<int>> rotation(g.vertex_count());
    for (const auto& v : g.vertices()) {
        for (int w : de.rotation[static_cast<std::size_t>(h.index(v))]) {
            if (member[static_cast<std::size_t>(w)]) rotation[static_cast<std::size_t>(g.index(v))].push_back(g.index(h.id(w)));
        }
    }
    Embedding e = embedding_from_rotation(g, std::move(rotation));
    std::vector<int> outer;
    for (int x : outer_h) outer.push_back(g.index(h.id(x)));
    for (std::size_t f = 0; f < e.faces.size(); ++f) {
        const auto& w = e.faces[f];
        if (w.size() != outer.size()) continue;
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (std::equal(outer.begin(), outer.end(), w.begin() + static_cast<long>(s), w.end()) &&
                std::equal(outer.begin() + static_cast<long>(w.size() - s), outer.end(), w.begin())) {
                e.outer_face = f;
                return e;
            }
        }
    }
    return e;
}

/// True iff the subgraph induced by `d` has >= 3 vertices and no cut vertex.
inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (const auto& v : g.vertices()) {
        if (!is_connected(remove_vertices(g, VertexSet{v}))) return false;
    }
    return true;
}

/// Facial cycle of G[D] bounding the face that contains the disc boundary,
/// oriented clockwise and starting at its smallest vertex.
inline std::vector<Vertex> outer_cycle(const TerminalGraph& tg, const VertexSet& d) {
    const Graph sub = tg.graph().induced(d);
    if (!is_two_connected(sub)) throw precondition_error("outer cycle needs a 2-connected vertex set");
    auto de = detail::embed_augmented(tg);
    const Graph& h = de.augmented;
    std::vector<bool> member(h.vertex_count(), false);
    for (const auto& v : d) member[static_cast<std::size_t>(h.index(v))] = true;
    const auto walks = detail::trace_faces(de.rotation, member);
    const auto face = detail::face_toward_marker(de, member, walks);
    std::vector<Vertex> cyc;
    for (int x : face) cyc.push_back(h.id(x));
    auto first = std::min_element(cyc.begin(), cyc.end(), NaturalLess{});
    std::rotate(cyc.begin(), first, cyc.end());
    return cyc;
}

/// Union of the boundary walks through x, as a subgraph.
inline Graph cofacial_closure(const Embedding& e, std::string_view x) {
    const int xi = e.graph.index(x);
    VertexSet vs{std::string(x)};
    EdgeSet es;
    for (const auto& w : e.faces) {
        if (std::find(w.begin(), w.end(), xi) == w.end()) continue;
        for (std::size_t i = 0; i < w.size(); ++i) {
            vs.insert(e.graph.id(w[i]));
            if (w.size() > 1) {
                const int a = w[i], b = w[(i + 1) % w.size()];
                if (a != b) es.emplace(e.graph.id(a), e.graph.id(b));
            }
        }
    }
    return Graph(std::vector<Vertex>(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));
}

}  // namespace wheels
