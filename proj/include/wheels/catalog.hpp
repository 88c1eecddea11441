#pragma once

// The six boundary-5 obstructions and rooted isomorphism.
//
// Every member has terminals t1..t5 in clockwise boundary order. Member Z is
// usually described with terminals (x, q, r, s, t); here x, q, r, s, t are
// t1, t2, t3, t4, t5 respectively.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheels/graph.hpp"
#include "wheels/terminal_graph.hpp"

namespace wheels {

struct CatalogMember {
    std::string name;
    TerminalGraph tg;
    std::optional<Vertex> special_vertex;  // the terminal with three interior neighbours in Y
};

namespace detail {

inline CatalogMember member(std::string name, std::vector<Vertex> interior,
                            std::vector<std::pair<Vertex, std::vector<Vertex>>> adjacency,
                            std::optional<Vertex> special = std::nullopt) {
    std::vector<Vertex> ts{"t1", "t2", "t3", "t4", "t5"};
    std::vector<Vertex> ids = ts;
    ids.insert(ids.end(), interior.begin(), interior.end());
    EdgeSet es;
    for (const auto& [v, nbrs] : adjacency) {
        for (const auto& w : nbrs) es.emplace(v, w);
    }
    Graph g(ids, std::vector<Edge>(es.begin(), es.end()));
    return CatalogMember{std::move(name), TerminalGraph(std::move(g), ts, true), std::move(special)};
}

}  // namespace detail

inline const std::vector<CatalogMember>& catalog() {
    static const std::vector<CatalogMember> members = [] {
        std::vector<CatalogMember> m;
        m.push_back(detail::member("W1", {"u"}, {{"u", {"t1", "t2", "t3", "t4"}}}));
        m.push_back(detail::member("W2", {"u"}, {{"u", {"t1", "t2", "t3", "t4", "t5"}}}));
        m.push_back(detail::member("X1", {"u", "v"}, {{"u", {"v", "t1", "t2", "t3"}}, {"v", {"t3", "t4", "t5", "t1"}}}));
        m.push_back(detail::member("X2", {"u", "v"}, {{"u", {"v", "t1", "t2", "t3"}}, {"v", {"t3", "t4", "t5"}}}));
        m.push_back(detail::member("Y", {"u", "v", "w"},
                                   {{"u", {"v", "t1", "t2", "t3"}}, {"v", {"w", "t1", "t3", "t4"}}, {"w", {"t1", "t4", "t5"}}},
                                   Vertex("t1")));
        m.push_back(detail::member("Z", {"z", "u", "v", "w"},
                                   {{"z", {"t1", "t2", "t5", "u", "v", "w"}},
                                    {"u", {"t2", "t3", "v"}},
                                    {"v", {"t3", "t4", "w"}},
                                    {"w", {"t4", "t5"}}}));
        return m;
    }();
    return members;
}

inline const CatalogMember& catalog_member(std::string_view name) {
    for (const auto& m : catalog()) {
        if (m.name == name) return m;
    }
    throw input_error("unknown catalog member '" + std::string(name) + "'");
}

using VertexMap = std::map<Vertex, Vertex, NaturalLess>;

namespace detail {

class RootedIso {
public:
    RootedIso(const TerminalGraph& a, const TerminalGraph& b) : a_(a.graph()), b_(b.graph()) {
        const std::size_t n = a_.vertex_count();
        term_a_.assign(n, false);
        term_b_.assign(n, false);
        for (const auto& t : a.terminals()) term_a_[static_cast<std::size_t>(a_.index(t))] = true;
        for (const auto& t : b.terminals()) term_b_[static_cast<std::size_t>(b_.index(t))] = true;
        // high degree first, then neighbours of already ordered vertices
        std::vector<bool> placed(n, false);
        while (order_.size() < n) {
            int best = -1;
            int best_links = -1;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : a_.neighbors(static_cast<int>(v))) links += placed[static_cast<std::size_t>(w)] ? 1 : 0;
                if (links > best_links ||
                    (links == best_links && a_.degree(static_cast<int>(v)) > a_.degree(best))) {
                    best = static_cast<int>(v);
                    best_links = links;
                }
            }
            placed[static_cast<std::size_t>(best)] = true;
            order_.push_back(best);
        }
    }

    std::optional<VertexMap> run() {
        const std::size_t n = a_.vertex_count();
        if (n != b_.vertex_count() || a_.edge_count() != b_.edge_count()) return std::nullopt;
        if (std::count(term_a_.begin(), term_a_.end(), true) != std::count(term_b_.begin(), term_b_.end(), true)) {
            return std::nullopt;
        }
        map_.assign(n, -1);
        used_.assign(n, false);
        if (!extend(0)) return std::nullopt;
        VertexMap out;
        for (std::size_t v = 0; v < n; ++v) out[a_.id(static_cast<int>(v))] = b_.id(map_[v]);
        return out;
    }

private:
    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const int v = order_[k];
        for (int x = 0; x < static_cast<int>(b_.vertex_count()); ++x) {
            if (used_[static_cast<std::size_t>(x)]) continue;
            if (term_a_[static_cast<std::size_t>(v)] != term_b_[static_cast<std::size_t>(x)]) continue;
            if (a_.degree(v) != b_.degree(x)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int w = order_[j];
                ok = a_.adjacent(v, w) == b_.adjacent(x, map_[static_cast<std::size_t>(w)]);
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(v)] = x;
            used_[static_cast<std::size_t>(x)] = true;
            if (extend(k + 1)) return true;
            used_[static_cast<std::size_t>(x)] = false;
        }
        map_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<bool> term_a_, term_b_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

}  // namespace detail

/// A graph isomorphism A -> B carrying terminals onto terminals (setwise).
inline std::optional<VertexMap> rooted_isomorphism(const TerminalGraph& a, const TerminalGraph& b) {
    return detail::RootedIso(a, b).run();
}

inline bool rooted_isomorphic(const TerminalGraph& a, const TerminalGraph& b) {
    return rooted_isomorphism(a, b).has_value();
}

struct CatalogMatch {
    const CatalogMember* member = nullptr;
    VertexMap to_member;  // vertices of the query onto the member
};

inline std::optional<CatalogMatch> match_catalog(const TerminalGraph& tg) {
    for (const auto& m : catalog()) {
        if (auto iso = rooted_isomorphism(tg, m.tg)) return CatalogMatch{&m, std::move(*iso)};
    }
    return std::nullopt;
}

inline std::optional<CatalogMember> matches_catalog(const TerminalGraph& tg) {
    if (auto m = match_catalog(tg)) return *m->member;
    return std::nullopt;
}

}  // namespace wheels
