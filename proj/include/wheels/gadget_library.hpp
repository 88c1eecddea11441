#pragma once

// The reductions used against a minimal counterexample, each paired with the
// local configuration it acts on. Boundary vertices of a configuration are
// the ones a host may attach to; interior vertices see only the configuration.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wheels/gadget.hpp"
#include "wheels/graph.hpp"
#include "wheels/terminal_graph.hpp"

namespace wheels {

struct Gadget {
    GadgetRule rule;
    TerminalGraph config;                                // boundary in disc order
    std::map<Vertex, int, NaturalLess> outside_degree;   // exact host degree where the rule needs it
};

namespace detail {

using Adjacency = std::vector<std::pair<Vertex, std::vector<Vertex>>>;
using Path = std::vector<Vertex>;

inline TerminalGraph config_graph(const std::vector<Vertex>& boundary, const std::vector<Vertex>& interior,
                                  const Adjacency& adj) {
    std::vector<Vertex> ids = boundary;
    ids.insert(ids.end(), interior.begin(), interior.end());
    EdgeSet es;
    for (const auto& [v, nbrs] : adj) {
        for (const auto& w : nbrs) es.emplace(v, w);
    }
    return TerminalGraph(Graph(ids, std::vector<Edge>(es.begin(), es.end())), boundary, true);
}

inline std::vector<Vertex> names(std::string_view prefix, int n) {
    std::vector<Vertex> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

inline Edge E(const char* a, const char* b) { return Edge(a, b); }

inline LiftOption replacing(std::string label, std::vector<std::pair<Edge, Path>> rp,
                            std::map<Vertex, Vertex, NaturalLess> rename = {}) {
    LiftOption o;
    o.label = std::move(label);
    for (auto& [e, p] : rp) o.replace.emplace(e, std::move(p));
    o.rename = std::move(rename);
    return o;
}

inline LiftOption adding(std::string label, std::vector<Path> paths) {
    LiftOption o;
    o.label = std::move(label);
    o.extra = std::move(paths);
    o.covers_all = true;
    return o;
}

/// Rim v1..vk (with optional middle vertices) where terminal ti sees vi and v(i+1).
struct Rim {
    std::vector<Vertex> cycle;
    std::vector<Vertex> interior;
    Adjacency adj;
};

inline Rim rim(const std::vector<Vertex>& cycle, const std::vector<std::pair<Vertex, Vertex>>& chords) {
    Rim r;
    r.cycle = cycle;
    r.interior = cycle;
    for (std::size_t i = 0; i < cycle.size(); ++i) r.adj.push_back({cycle[i], {cycle[(i + 1) % cycle.size()]}});
    for (int i = 1; i <= 5; ++i) {
        const Vertex t = "t" + std::to_string(i);
        r.adj.push_back({t, {"v" + std::to_string(i), "v" + std::to_string(i % 5 + 1)}});
    }
    for (const auto& [a, b] : chords) r.adj.push_back({a, {b}});
    return r;
}

/// The arc of `cycle` from a to b walking in direction `step` (+1 or -1).
inline Path walk(const std::vector<Vertex>& cycle, const Vertex& a, const Vertex& b, int step) {
    const int n = static_cast<int>(cycle.size());
    int i = static_cast<int>(std::find(cycle.begin(), cycle.end(), a) - cycle.begin());
    Path p{cycle[static_cast<std::size_t>(i)]};
    while (cycle[static_cast<std::size_t>(i)] != b) {
        i = ((i + step) % n + n) % n;
        p.push_back(cycle[static_cast<std::size_t>(i)]);
    }
    return p;
}

inline Gadget two_vertex_shortcut() {
    Gadget g;
    g.config = config_graph(names("v", 4), {"u", "v"},
                            {{"u", {"v1", "v2", "v3", "v"}}, {"v", {"v1", "v3", "v4"}}});
    auto& r = g.rule;
    r.name = "two-vertex-shortcut";
    r.summary = "two adjacent degree-4 interior vertices replaced by the edge v2v4";
    r.remove.vertices = {"u", "v"};
    r.insert_edges = {E("v2", "v4")};
    r.options = {replacing("v2-u-v-v4", {{E("v2", "v4"), {"v2", "u", "v", "v4"}}})};
    return g;
}

inline Gadget triangle_fan() {
    Gadget g;
    g.config = config_graph(names("v", 5), {"u", "v", "w"},
                            {{"u", {"v", "w", "v1", "v5"}}, {"v", {"w", "v1", "v2", "v3"}}, {"w", {"v3", "v4", "v5"}}});
    auto& r = g.rule;
    r.name = "triangle-fan";
    r.summary = "interior triangle whose middle vertex sees v1 v2 v3 replaced by a fan from v5";
    r.remove.vertices = {"u", "v", "w"};
    r.insert_edges = {E("v5", "v1"), E("v5", "v2"), E("v5", "v3")};
    r.options = {
        adding("w takes the place of v5", {{"w", "v5"}, {"w", "u", "v1"}, {"w", "v", "v2"}, {"w", "v3"}}),
        replacing("v5-u-v1, v5-w-v-v2", {{E("v5", "v1"), {"v5", "u", "v1"}}, {E("v5", "v2"), {"v5", "w", "v", "v2"}}}),
        replacing("v5-u-v1, v5-w-v3", {{E("v5", "v1"), {"v5", "u", "v1"}}, {E("v5", "v3"), {"v5", "w", "v3"}}}),
        replacing("v5-u-v-v2, v5-w-v3", {{E("v5", "v2"), {"v5", "u", "v", "v2"}}, {E("v5", "v3"), {"v5", "w", "v3"}}}),
    };
    return g;
}

inline Gadget triangle_pair() {
    Gadget g;
    g.config = config_graph(names("v", 5), {"u", "v", "w"},
                            {{"u", {"v", "w", "v1", "v5"}}, {"v", {"w", "v2", "v3"}}, {"w", {"v3", "v4", "v5"}}});
    auto& r = g.rule;
    r.name = "triangle-pair";
    r.summary = "interior triangle without the edge v v1 replaced by v5v2 and v5v3";
    r.remove.vertices = {"u", "v", "w"};
    r.insert_edges = {E("v5", "v2"), E("v5", "v3")};
    r.options = {replacing("v5-u-v-v2, v5-w-v3",
                           {{E("v5", "v2"), {"v5", "u", "v", "v2"}}, {E("v5", "v3"), {"v5", "w", "v3"}}})};
    return g;
}

inline Gadget path_shortcut() {
    Gadget g;
    g.config = config_graph(names("t", 5), {"u", "v", "w"},
                            {{"u", {"t1", "t2", "t3", "v"}}, {"v", {"t3", "t4", "w"}}, {"w", {"t4", "t5", "t1"}}});
    auto& r = g.rule;
    r.name = "path-shortcut";
    r.summary = "interior path u v w with v not adjacent to t1 replaced by t1t3 and t1t4";
    r.remove.vertices = {"u", "v", "w"};
    r.insert_edges = {E("t1", "t3"), E("t1", "t4")};
    r.options = {replacing("t1-u-t3, t1-w-t4", {{E("t1", "t3"), {"t1", "u", "t3"}}, {E("t1", "t4"), {"t1", "w", "t4"}}})};
    return g;
}

inline Gadget path_identify() {
    Gadget g;
    g.config = config_graph(names("t", 5), {"u", "v", "w"},
                            {{"u", {"t1", "t2", "t3", "v"}}, {"v", {"t1", "t3", "t4", "w"}}, {"w", {"t1", "t4", "t5"}}});
    g.outside_degree = {{"t1", 1}};
    auto& r = g.rule;
    r.name = "path-identify";
    r.summary = "delete t1 and v, then identify u and w into vstar";
    r.remove.vertices = {"t1", "u", "v", "w"};
    r.insert_vertices = {"vstar"};
    r.insert_edges = {E("vstar", "t2"), E("vstar", "t3"), E("vstar", "t4"), E("vstar", "t5")};
    r.options = {replacing("vstar becomes v",
                           {{E("vstar", "t2"), {"v", "u", "t2"}},
                            {E("vstar", "t3"), {"v", "t3"}},
                            {E("vstar", "t4"), {"v", "t4"}},
                            {E("vstar", "t5"), {"v", "w", "t5"}}},
                           {{"vstar", "v"}})};
    return g;
}

inline Gadget chorded_square() {
    Gadget g;
    g.config = config_graph(names("t", 4), {"u1", "u2", "u3", "u4"},
                            {{"u1", {"t1", "t2", "u2", "u4"}},
                             {"u2", {"t2", "t3", "u3", "u4"}},
                             {"u3", {"t3", "t4", "u4"}},
                             {"u4", {"t4", "t1"}}});
    auto& r = g.rule;
    r.name = "chorded-square";
    r.summary = "4-cycle u1..u4 with chord u2u4 replaced by the triangle t1 t2 t3";
    r.remove.vertices = {"u1", "u2", "u3", "u4"};
    r.insert_edges = {E("t1", "t2"), E("t2", "t3"), E("t3", "t1")};
    r.options = {replacing("t1-u1-t2, t2-u2-t3, t3-u3-u4-t1",
                           {{E("t1", "t2"), {"t1", "u1", "t2"}},
                            {E("t2", "t3"), {"t2", "u2", "t3"}},
                            {E("t3", "t1"), {"t3", "u3", "u4", "t1"}}})};
    return g;
}

/// Rim v1 v2 v3 x v4 v5 w5 with x adjacent to w5 and v1.
inline Rim corner_rim(bool apex) {
    std::vector<std::pair<Vertex, Vertex>> chords{{"x", "w5"}, {"x", "v1"}};
    if (apex) {
        chords.emplace_back("x", "v5");
        chords.emplace_back("x", "v2");
    }
    Rim r = rim({"v1", "v2", "v3", "x", "v4", "v5", "w5"}, chords);
    // t5 sees w5 rather than v1
    for (auto& [v, nbrs] : r.adj) {
        if (v == "t5") nbrs = {"v5", "w5"};
    }
    return r;
}

inline Gadget corner_shortcut() {
    Gadget g;
    const Rim rm = corner_rim(false);
    g.config = config_graph(names("t", 5), rm.interior, rm.adj);
    auto& r = g.rule;
    r.name = "corner-shortcut";
    r.summary = "corner v4 v5 w5 removed and x joined to t4 and t5";
    r.remove.vertices = {"v4", "v5", "w5"};
    r.insert_edges = {E("x", "t4"), E("x", "t5")};
    r.options = {replacing("x-v4-t4, x-w5-t5", {{E("x", "t4"), {"x", "v4", "t4"}}, {E("x", "t5"), {"x", "w5", "t5"}}})};
    return g;
}

inline Gadget corner_apex() {
    Gadget g;
    const Rim rm = corner_rim(true);
    g.config = config_graph(names("t", 5), rm.interior, rm.adj);
    auto& r = g.rule;
    r.name = "corner-apex";
    r.summary = "whole rim replaced by an apex on t1 t2 t4 t5 plus the edge t1t5";
    r.remove.vertices = VertexSet(rm.interior.begin(), rm.interior.end());
    r.insert_vertices = {"apex"};
    r.insert_edges = {E("t1", "t5"), E("apex", "t1"), E("apex", "t2"), E("apex", "t4"), E("apex", "t5")};
    r.options = {replacing("apex becomes x",
                           {{E("t1", "t5"), {"t5", "w5", "v1", "t1"}},
                            {E("apex", "t1"), {"x", "v2", "t1"}},
                            {E("apex", "t2"), {"x", "v3", "t2"}},
                            {E("apex", "t4"), {"x", "v4", "t4"}},
                            {E("apex", "t5"), {"x", "v5", "t5"}}},
                           {{"apex", "x"}})};
    return g;
}

/// Apex on all five terminals; the unused apex edge picks the rim vertex
/// that takes the apex's place.
inline Gadget rim_apex(std::string name, const Rim& rm) {
    Gadget g;
    g.config = config_graph(names("t", 5), rm.interior, rm.adj);
    auto& r = g.rule;
    r.name = std::move(name);
    r.summary = "whole rim replaced by an apex adjacent to every terminal";
    r.remove.vertices = VertexSet(rm.interior.begin(), rm.interior.end());
    r.insert_vertices = {"apex"};
    for (int i = 1; i <= 5; ++i) r.insert_edges.emplace("apex", "t" + std::to_string(i));
    auto v = [](int i) { return "v" + std::to_string((i - 1 + 50) % 5 + 1); };
    auto t = [](int i) { return "t" + std::to_string((i - 1 + 50) % 5 + 1); };
    for (int j : {5, 1, 2, 3, 4}) {
        const int s = j - 5;
        const Vertex c = v(3 + s);
        LiftOption o;
        o.label = "apex edge to " + t(j) + " unused, apex becomes " + c;
        o.rename = {{"apex", c}};
        Path p1 = walk(rm.cycle, c, v(2 + s), -1);
        p1.push_back(t(1 + s));
        Path p4 = walk(rm.cycle, c, v(4 + s), +1);
        p4.push_back(t(4 + s));
        o.replace.emplace(Edge("apex", t(1 + s)), p1);
        o.replace.emplace(Edge("apex", t(2 + s)), Path{c, t(2 + s)});
        o.replace.emplace(Edge("apex", t(3 + s)), Path{c, t(3 + s)});
        o.replace.emplace(Edge("apex", t(4 + s)), p4);
        r.options.push_back(std::move(o));
    }
    return g;
}

inline Rim pentagon_rim() { return rim(names("v", 5), {{"v4", "v1"}, {"v4", "v2"}}); }

inline Rim fan_rim(bool with_v3v5) {
    std::vector<std::pair<Vertex, Vertex>> chords{{"a", "v3"}, {"a", "v5"}};
    if (with_v3v5) chords.emplace_back("v3", "v5");
    return rim({"v1", "a", "v2", "v3", "v4", "v5"}, chords);
}

inline Gadget fan_shortcut() {
    Gadget g;
    const Rim rm = fan_rim(true);
    g.config = config_graph(names("t", 5), rm.interior, rm.adj);
    auto& r = g.rule;
    r.name = "fan-shortcut";
    r.summary = "a v1 v2 removed and t1 joined to v3 and v5";
    r.remove.vertices = {"a", "v1", "v2"};
    r.insert_edges = {E("t1", "v3"), E("t1", "v5")};
    r.options = {replacing("t1-v2-v3, t1-v1-v5", {{E("t1", "v3"), {"t1", "v2", "v3"}}, {E("t1", "v5"), {"t1", "v1", "v5"}}})};
    return g;
}

inline Gadget pentagon_triangle() {
    Gadget g;
    const Rim rm = pentagon_rim();
    g.config = config_graph(names("t", 5), rm.interior, rm.adj);
    auto& r = g.rule;
    r.name = "pentagon-triangle";
    r.summary = "5-cycle rim replaced by the triangle t1 t3 t4";
    r.remove.vertices = VertexSet(rm.interior.begin(), rm.interior.end());
    r.insert_edges = {E("t1", "t3"), E("t3", "t4"), E("t4", "t1")};
    r.options = {replacing("cycle t1 v2 v3 t3 v4 t4 v5 v1",
                           {{E("t1", "t3"), {"t1", "v2", "v3", "t3"}},
                            {E("t3", "t4"), {"t3", "v4", "t4"}},
                            {E("t4", "t1"), {"t4", "v5", "v1", "t1"}}})};
    return g;
}

inline Gadget nine_vertex_collapse() {
    Gadget g;
    g.config = config_graph({"p", "x", "r", "s", "t"}, {"q", "z", "u", "v", "w"},
                            {{"q", {"x", "p", "u", "z"}},
                             {"z", {"p", "t", "u", "v", "w"}},
                             {"u", {"r", "v"}},
                             {"v", {"r", "s", "w"}},
                             {"w", {"s", "t"}}});
    auto& r = g.rule;
    r.name = "nine-vertex-collapse";
    r.summary = "q u v w z removed; triangle p r t plus px and ts added";
    r.remove.vertices = {"q", "u", "v", "w", "z"};
    r.insert_edges = {E("r", "p"), E("r", "t"), E("p", "t"), E("p", "x"), E("t", "s")};
    r.normalize = {E("p", "t")};
    auto P = [](std::string_view s) {
        Path p;
        for (char c : s) p.emplace_back(1, c);
        return p;
    };
    auto opt = [&](std::string label, std::vector<std::string_view> paths) {
        std::vector<Path> ps;
        for (auto s : paths) ps.push_back(P(s));
        return adding(std::move(label), std::move(ps));
    };
    r.options = {
        opt("w for t, z for p", {"wt", "ws", "wvr", "wz", "zp", "zqx", "zur"}),
        opt("w for t, pr through q", {"wt", "ws", "wvr", "wzp", "pqur"}),
        opt("z for p, tr through w", {"zp", "zt", "zqx", "zur", "twvr"}),
        opt("cycle through the triangle", {"tzpqurvwt"}),
        opt("p interior, rp and px used", {"tws", "tzvr", "ruqx"}),
        opt("p interior, rp used", {"tws", "tzvr", "ruqp"}),
        opt("p interior, px used", {"tws", "tzvr", "pqx"}),
        opt("t interior, rt and ts used", {"pqx", "pzur", "rvs"}),
        opt("t interior, rt used", {"pqx", "pzur", "rvwt"}),
        opt("t interior, ts used", {"pqx", "pzur", "tws"}),
        opt("w for t", {"wt", "ws", "wzp", "wvr", "pqx"}),
        opt("z for p", {"zp", "zt", "zqx", "zur", "tws"}),
        opt("path s..x", {"swtzpqx"}),
        opt("path s..r", {"swtzpqur"}),
        opt("path r..x", {"rvwtzpqx"}),
    };
    return g;
}

}  // namespace detail

inline const std::vector<Gadget>& gadget_library() {
    static const std::vector<Gadget> lib = [] {
        std::vector<Gadget> out;
        out.push_back(detail::two_vertex_shortcut());
        out.push_back(detail::triangle_fan());
        out.push_back(detail::triangle_pair());
        out.push_back(detail::path_shortcut());
        out.push_back(detail::path_identify());
        out.push_back(detail::chorded_square());
        out.push_back(detail::corner_shortcut());
        out.push_back(detail::corner_apex());
        out.push_back(detail::rim_apex("rim-apex", detail::pentagon_rim()));
        out.push_back(detail::rim_apex("rim-apex-split", detail::fan_rim(true)));
        out.push_back(detail::fan_shortcut());
        out.push_back(detail::pentagon_triangle());
        out.push_back(detail::nine_vertex_collapse());
        return out;
    }();
    return lib;
}

inline const Gadget& gadget(std::string_view name) {
    for (const auto& g : gadget_library()) {
        if (g.rule.name == name) return g;
    }
    throw input_error("unknown gadget rule '" + std::string(name) + "'");
}

}  // namespace wheels
