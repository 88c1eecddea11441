#pragma once

// Local reductions G -> G' and the lifting of K5-subdivisions back to G.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheels/error.hpp"
#include "wheels/graph.hpp"
#include "wheels/subdivision.hpp"

namespace wheels {

/// One way of undoing the reduction. `replace` routes an inserted edge
/// through deleted vertices; `rename` sends an inserted vertex to an original
/// one; `extra` paths are added whole whenever the option is tried.
struct LiftOption {
    std::string label;
    std::map<Edge, std::vector<Vertex>> replace;
    std::map<Vertex, Vertex, NaturalLess> rename;
    std::vector<std::vector<Vertex>> extra;
    bool covers_all = false;  // applicable whatever inserted edges T' uses
};

struct GadgetRule {
    std::string name;
    std::string summary;
    VertexEdgeSet remove;
    VertexSet insert_vertices;
    EdgeSet insert_edges;
    std::vector<LiftOption> options;
    std::vector<Edge> normalize;  // inserted edges T' is rerouted onto when both ends are branch vertices
};

inline Graph apply_gadget(const Graph& g, const GadgetRule& r) {
    return add(remove(g, r.remove), r.insert_vertices, r.insert_edges);
}

/// Empty when the rule's replacement paths are well formed, else the defect.
inline std::string gadget_rule_defect(const GadgetRule& r) {
    for (const auto& e : r.insert_edges) {
        for (const auto& x : {e.u, e.v}) {
            if (r.remove.vertices.count(x)) return "inserted edge " + e.u + "-" + e.v + " touches a removed vertex";
        }
    }
    for (const auto& opt : r.options) {
        for (const auto& [from, to] : opt.rename) {
            if (!r.insert_vertices.count(from)) return opt.label + ": renames a vertex that is not inserted";
            if (!r.remove.vertices.count(to)) return opt.label + ": renames onto a vertex that is not removed";
        }
        auto mapped = [&](const Vertex& v) {
            auto it = opt.rename.find(v);
            return it == opt.rename.end() ? v : it->second;
        };
        for (const auto& [e, p] : opt.replace) {
            if (!r.insert_edges.count(e)) return opt.label + ": replaces a pair that is not inserted";
            if (p.size() < 2) return opt.label + ": empty replacement path";
            const Vertex a = mapped(e.u), b = mapped(e.v);
            const bool fwd = p.front() == a && p.back() == b;
            const bool rev = p.front() == b && p.back() == a;
            if (!fwd && !rev) return opt.label + ": replacement for " + e.u + "-" + e.v + " has wrong ends";
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                if (!r.remove.vertices.count(p[i])) return opt.label + ": replacement interior '" + p[i] + "' is not removed";
            }
        }
    }
    return {};
}

struct LiftResult {
    Subdivision subdivision;
    std::string option;
    bool extracted = false;  // found inside the union rather than by direct substitution
};

namespace detail {

inline std::vector<Vertex> oriented(const std::vector<Vertex>& p, const Vertex& from) {
    if (p.front() == from) return p;
    return std::vector<Vertex>(p.rbegin(), p.rend());
}

inline bool inserted_edge(const GadgetRule& r, const Vertex& a, const Vertex& b) {
    return r.insert_edges.count(Edge(a, b)) > 0;
}

/// Point T' at the direct inserted edge between two branch vertices.
inline Subdivision normalized(const GadgetRule& r, Subdivision t) {
    for (const auto& e : r.normalize) {
        for (std::size_t k = 0; k < kK5Edges.size(); ++k) {
            const Vertex& a = t.branch[static_cast<std::size_t>(kK5Edges[k].first)];
            const Vertex& b = t.branch[static_cast<std::size_t>(kK5Edges[k].second)];
            if (Edge(a, b) == e) t.paths[k] = {a, b};
        }
    }
    return t;
}

inline std::optional<Subdivision> substitute(const Graph& g, const GadgetRule& r, const LiftOption& opt,
                                             const Subdivision& t) {
    auto mapped = [&](const Vertex& v) {
        auto it = opt.rename.find(v);
        return it == opt.rename.end() ? v : it->second;
    };
    Subdivision out;
    for (std::size_t i = 0; i < 5; ++i) out.branch[i] = mapped(t.branch[i]);
    for (std::size_t k = 0; k < 10; ++k) {
        const auto& p = t.paths[k];
        std::vector<Vertex> q{mapped(p.front())};
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (inserted_edge(r, p[i], p[i + 1])) {
                auto it = opt.replace.find(Edge(p[i], p[i + 1]));
                if (it == opt.replace.end()) return std::nullopt;
                auto rp = oriented(it->second, mapped(p[i]));
                q.insert(q.end(), rp.begin() + 1, rp.end());
            } else {
                q.push_back(mapped(p[i + 1]));
            }
        }
        out.paths[k] = std::move(q);
    }
    if (!is_valid_subdivision(g, out)) return std::nullopt;
    return out;
}

/// T' minus the inserted edges, plus the option's paths, as a subgraph of g.
inline Graph lift_union(const GadgetRule& r, const LiftOption& opt, const Subdivision& t) {
    VertexSet vs;
    EdgeSet es;
    auto add_path = [&](const std::vector<Vertex>& p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            vs.insert(p[i]);
            if (i + 1 < p.size()) es.emplace(p[i], p[i + 1]);
        }
    };
    for (const auto& p : t.paths) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (inserted_edge(r, p[i], p[i + 1])) {
                auto it = opt.replace.find(Edge(p[i], p[i + 1]));
                if (it != opt.replace.end()) add_path(it->second);
            } else {
                add_path({p[i], p[i + 1]});
            }
        }
    }
    for (const auto& p : opt.extra) add_path(p);
    return Graph(std::vector<Vertex>(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));
}

}  // namespace detail

/// Turns a K5-subdivision of apply_gadget(g, r) into one of g. Options are
/// tried in order; each first by substituting replacement paths, then by an
/// exact search inside T' minus inserted edges plus the option's paths.
inline LiftResult lift_subdivision_traced(const Graph& g, const GadgetRule& r, const Subdivision& t_prime) {
    const Graph reduced = apply_gadget(g, r);
    if (auto d = subdivision_defect(reduced, t_prime); !d.empty()) {
        throw precondition_error("T' is not a K5-subdivision of the reduced graph: " + d);
    }
    const Subdivision t = detail::normalized(r, t_prime);
    EdgeSet used;
    for (const auto& e : r.insert_edges) {
        if (t.uses_edge(e)) used.insert(e);
    }
    if (used.empty() && is_valid_subdivision(g, t)) return LiftResult{t, "unchanged", false};
    for (const auto& opt : r.options) {
        bool applicable = true;
        if (!opt.covers_all) {
            for (const auto& e : used) applicable = applicable && opt.replace.count(e);
        }
        if (!applicable) continue;
        if (opt.extra.empty()) {
            if (auto s = detail::substitute(g, r, opt, t)) return LiftResult{*s, opt.label, false};
        }
        const Graph h = detail::lift_union(r, opt, t);
        for (const auto& v : h.vertices()) {
            if (!g.contains(v)) throw construction_error("lift union leaves the original graph at '" + v + "'");
        }
        if (auto s = find_k5_subdivision(h, SearchLimits{kDenseCapacity})) {
            if (!is_valid_subdivision(g, *s)) throw construction_error("lifted subdivision does not validate");
            return LiftResult{*s, opt.label, true};
        }
    }
    throw lifting_failure("rule '" + r.name + "': no replacement option yields a K5-subdivision");
}

inline Subdivision lift_subdivision(const Graph& g, const GadgetRule& r, const Subdivision& t_prime) {
    return lift_subdivision_traced(g, r, t_prime).subdivision;
}

}  // namespace wheels
