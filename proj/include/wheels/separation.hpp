#pragma once

// k-separations: streaming enumeration, the defining predicate, brute-force
// vertex connectivity, and the planar-side trichotomy check.

#include <optional>
#include <string>
#include <vector>

#include "wheels/catalog.hpp"
#include "wheels/dense.hpp"
#include "wheels/error.hpp"
#include "wheels/graph.hpp"
#include "wheels/planarity.hpp"
#include "wheels/terminal_graph.hpp"
#include "wheels/wheel.hpp"

namespace wheels {

struct Subgraph {
    VertexSet vertices;
    EdgeSet edges;

    Graph to_graph() const {
        return Graph(std::vector<Vertex>(vertices.begin(), vertices.end()), std::vector<Edge>(edges.begin(), edges.end()));
    }
    bool operator==(const Subgraph&) const = default;
    auto operator<=>(const Subgraph& o) const {
        if (auto c = std::lexicographical_compare_three_way(vertices.begin(), vertices.end(), o.vertices.begin(),
                                                            o.vertices.end(), [](const Vertex& a, const Vertex& b) {
                                                                if (natural_less(a, b)) return std::strong_ordering::less;
                                                                if (natural_less(b, a)) return std::strong_ordering::greater;
                                                                return std::strong_ordering::equal;
                                                            });
            c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(edges.begin(), edges.end(), o.edges.begin(), o.edges.end(),
                                                      [](const Edge& a, const Edge& b) {
                                                          if (a < b) return std::strong_ordering::less;
                                                          if (b < a) return std::strong_ordering::greater;
                                                          return std::strong_ordering::equal;
                                                      });
    }
};

struct Separation {
    Subgraph side1;
    Subgraph side2;

    VertexSet cut() const {
        VertexSet out;
        for (const auto& v : side1.vertices) {
            if (side2.vertices.count(v)) out.insert(v);
        }
        return out;
    }
    std::size_t order() const { return cut().size(); }

    /// Vertices of side1 not on side2.
    VertexSet exclusive1() const {
        VertexSet out;
        for (const auto& v : side1.vertices) {
            if (!side2.vertices.count(v)) out.insert(v);
        }
        return out;
    }
};

/// The defining predicate: edge-disjoint subgraphs covering g, each side with
/// an edge or an exclusive vertex.
inline bool is_separation(const Graph& g, const Separation& s) {
    for (const auto* side : {&s.side1, &s.side2}) {
        for (const auto& v : side->vertices) {
            if (!g.contains(v)) return false;
        }
        for (const auto& e : side->edges) {
            if (!side->vertices.count(e.u) || !side->vertices.count(e.v) || !g.adjacent(e.u, e.v)) return false;
        }
    }
    for (const auto& v : g.vertices()) {
        if (!s.side1.vertices.count(v) && !s.side2.vertices.count(v)) return false;
    }
    for (const auto& e : g.edges()) {
        if (s.side1.edges.count(e) == s.side2.edges.count(e)) return false;
    }
    auto nonempty = [](const Subgraph& a, const Subgraph& b) {
        if (!a.edges.empty()) return true;
        for (const auto& v : a.vertices) {
            if (!b.vertices.count(v)) return true;
        }
        return false;
    };
    return nonempty(s.side1, s.side2) && nonempty(s.side2, s.side1);
}

enum class SeparationMode {
    canonical,   // cut-internal edges on side2; side1 keeps an exclusive vertex
    exhaustive,  // every assignment of cut-internal edges, up to swapping sides
};

/// Streams every k-separation to visit(const Separation&); visit returns
/// false to stop. Cuts are taken in lexicographic order.
template <class F>
void enumerate_separations(const Graph& g, std::size_t k, F&& visit, SeparationMode mode = SeparationMode::canonical) {
    const std::size_t n = g.vertex_count();
    if (k > n) return;
    if (n > kDenseCapacity) throw resource_limit_error("enumerate_separations supports at most 64 vertices");
    std::vector<std::size_t> cut(k);
    for (std::size_t i = 0; i < k; ++i) cut[i] = i;
    const auto all_edges = g.index_edges();
    while (true) {
        std::vector<bool> in_cut(n, false);
        for (std::size_t c : cut) in_cut[c] = true;
        // components of g - cut
        std::vector<int> comp(n, -1);
        int comps = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (in_cut[s] || comp[s] >= 0) continue;
            std::vector<int> stack{static_cast<int>(s)};
            comp[s] = comps;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : g.neighbors(x)) {
                    if (!in_cut[static_cast<std::size_t>(y)] && comp[static_cast<std::size_t>(y)] < 0) {
                        comp[static_cast<std::size_t>(y)] = comps;
                        stack.push_back(y);
                    }
                }
            }
            ++comps;
        }
        std::vector<std::pair<int, int>> cut_edges;
        for (auto [a, b] : all_edges) {
            if (in_cut[static_cast<std::size_t>(a)] && in_cut[static_cast<std::size_t>(b)]) cut_edges.emplace_back(a, b);
        }
        if (comps > 62 || cut_edges.size() > 62) throw resource_limit_error("too many components or cut edges");

        auto build = [&](Mask group1, Mask edges1) {
            Separation s;
            for (std::size_t v = 0; v < n; ++v) {
                const Vertex& id = g.id(static_cast<int>(v));
                if (in_cut[v]) {
                    s.side1.vertices.insert(id);
                    s.side2.vertices.insert(id);
                } else if ((group1 >> comp[v]) & 1U) {
                    s.side1.vertices.insert(id);
                } else {
                    s.side2.vertices.insert(id);
                }
            }
            for (auto [a, b] : all_edges) {
                Edge e(g.id(a), g.id(b));
                const bool both_cut = in_cut[static_cast<std::size_t>(a)] && in_cut[static_cast<std::size_t>(b)];
                if (both_cut) continue;
                const int c = in_cut[static_cast<std::size_t>(a)] ? comp[static_cast<std::size_t>(b)] : comp[static_cast<std::size_t>(a)];
                ((group1 >> c) & 1U ? s.side1.edges : s.side2.edges).insert(e);
            }
            for (std::size_t i = 0; i < cut_edges.size(); ++i) {
                Edge e(g.id(cut_edges[i].first), g.id(cut_edges[i].second));
                ((edges1 >> i) & 1U ? s.side1.edges : s.side2.edges).insert(e);
            }
            return s;
        };

        const Mask groups = full_mask(comps);
        const std::size_t m = cut_edges.size();
        if (mode == SeparationMode::canonical) {
            for (Mask a = 1; a <= groups && a != 0; ++a) {
                const Mask b = groups & ~a;
                if (b == 0 && m == 0) continue;
                // swapping the sides gives the same separation when no cut edges exist
                if (m == 0 && !(a & 1U)) continue;
                if (!visit(build(a, 0))) return;
                if (a == groups) break;
            }
        } else {
            const Mask edge_masks = full_mask(static_cast<int>(m));
            for (Mask a = 0;; ++a) {
                const Mask b = groups & ~a;
                for (Mask e1 = 0;; ++e1) {
                    const Mask e2 = edge_masks & ~e1;
                    const bool ok1 = a != 0 || e1 != 0;
                    const bool ok2 = b != 0 || e2 != 0;
                    // keep the representative with the smaller (group, edges) key
                    const bool rep = a < b || (a == b && e1 <= e2);
                    if (ok1 && ok2 && rep) {
                        if (!visit(build(a, e1))) return;
                    }
                    if (e1 == edge_masks) break;
                }
                if (a == groups) break;
            }
        }

        int i = static_cast<int>(k) - 1;
        while (i >= 0 && cut[static_cast<std::size_t>(i)] == n - k + static_cast<std::size_t>(i)) --i;
        if (i < 0) return;
        ++cut[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) cut[j] = cut[j - 1] + 1;
    }
}

inline std::vector<Separation> all_separations(const Graph& g, std::size_t k, SeparationMode mode = SeparationMode::canonical) {
    std::vector<Separation> out;
    enumerate_separations(g, k, [&](const Separation& s) {
        out.push_back(s);
        return true;
    }, mode);
    return out;
}

/// Vertex connectivity >= k, with K_n counted as (n-1)-connected.
inline bool is_k_connected(const Graph& g, std::size_t k) {
    if (k == 0) return true;
    const std::size_t n = g.vertex_count();
    if (n < k + 1) return false;
    if (n > kDenseCapacity) throw resource_limit_error("is_k_connected supports at most 64 vertices");
    const DenseGraph d = DenseGraph::from(g);
    // every vertex set of size < k must leave g - X connected
    for (std::size_t size = 0; size < k; ++size) {
        std::vector<int> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<int>(i);
        while (true) {
            Mask removed = 0;
            for (int p : pick) removed |= bit(p);
            const Mask rest = d.all() & ~removed;
            if (rest && reach(d, lowest(rest), rest) != rest) return false;
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(n - size) + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

enum class Verdict { good_wheel, small, catalog, none };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::good_wheel: return "GOOD_WHEEL";
        case Verdict::small: return "SMALL";
        case Verdict::catalog: return "CATALOG";
        case Verdict::none: return "NONE";
    }
    return "?";
}

struct TrichotomyResult {
    Verdict verdict = Verdict::none;
    std::optional<Wheel> wheel;
    std::optional<std::string> catalog_name;
};

/// Which clause of the planar-side trichotomy holds for side1 of `sep`:
/// an S-good wheel, a 5-vertex side of a 4-separation, or a catalog member.
inline TrichotomyResult check_trichotomy(const Graph& g, const Separation& sep, const SearchLimits& limits = {}) {
    if (!is_separation(g, sep)) throw precondition_error("not a separation of the graph");
    const VertexSet cut = sep.cut();
    if (cut.size() != 4 && cut.size() != 5) throw precondition_error("separation order must be 4 or 5");
    if (sep.exclusive1().empty()) throw precondition_error("side1 has no exclusive vertex");
    const Graph side1 = sep.side1.to_graph();
    const TerminalGraph tg(side1, std::vector<Vertex>(cut.begin(), cut.end()), false);
    if (!is_disc_planar(tg)) throw precondition_error("side1 is not disc-planar with the cut on the boundary");

    TrichotomyResult r;
    if (auto w = find_s_good_wheel(tg, limits)) {
        r.verdict = Verdict::good_wheel;
        r.wheel = std::move(w);
        return r;
    }
    if (cut.size() == 4 && side1.vertex_count() == 5) {
        r.verdict = Verdict::small;
        return r;
    }
    if (cut.size() == 5) {
        if (auto m = match_catalog(tg)) {
            bool ok = true;
            if (m->member->special_vertex) {
                for (const auto& [from, to] : m->to_member) {
                    if (to == *m->member->special_vertex) ok = g.degree(from) >= 5;
                }
            }
            if (ok) {
                r.verdict = Verdict::catalog;
                r.catalog_name = m->member->name;
                return r;
            }
        }
    }
    return r;
}

}  // namespace wheels
