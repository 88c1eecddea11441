#pragma once

// Forced-then-greedy coloring schedules for the local configurations, and
// their exhaustive verification over every admissible boundary coloring.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheels/coloring.hpp"
#include "wheels/error.hpp"
#include "wheels/gadget_library.hpp"
#include "wheels/graph.hpp"

namespace wheels {

using ColorExpr = std::function<int(const Coloring&)>;
using ColorTest = std::function<bool(const Coloring&)>;

struct Step {
    enum class Kind { force, greedy, branch };
    Kind kind = Kind::greedy;
    Vertex vertex;
    ColorExpr color;
    std::string test_text;
    ColorTest test;
    std::vector<Step> then_steps, else_steps;
};

struct Recipe {
    std::string name;
    std::string summary;
    Graph local;                     // the configuration that must end up colored
    std::vector<Vertex> boundary;    // colored before the schedule runs
    std::vector<Vertex> phantom;     // reduced-graph vertices that only lend their color
    EdgeSet constraints;             // reduced-graph pairs that the base coloring keeps apart
    std::map<Vertex, int, NaturalLess> palette;  // colors 1..k allowed on a boundary vertex (default 4)
    std::vector<Step> steps;
};

namespace recipe {

inline ColorExpr color_of(Vertex v) {
    return [v = std::move(v)](const Coloring& c) {
        auto it = c.find(v);
        return it == c.end() ? 0 : it->second;
    };
}

inline ColorExpr constant(int k) {
    return [k](const Coloring&) { return k; };
}

/// Least color absent from the given vertices.
inline ColorExpr absent_from(std::vector<Vertex> vs) {
    return [vs = std::move(vs)](const Coloring& c) {
        int seen = 0;
        for (const auto& v : vs) {
            if (auto it = c.find(v); it != c.end()) seen |= 1 << (it->second - 1);
        }
        for (int col = 1; col <= kColors; ++col) {
            if (!((seen >> (col - 1)) & 1)) return col;
        }
        return 0;
    };
}

inline Step force(Vertex v, ColorExpr e) {
    Step s;
    s.kind = Step::Kind::force;
    s.vertex = std::move(v);
    s.color = std::move(e);
    return s;
}

inline Step force_as(Vertex v, Vertex like) { return force(std::move(v), color_of(std::move(like))); }

inline Step greedy(Vertex v) {
    Step s;
    s.kind = Step::Kind::greedy;
    s.vertex = std::move(v);
    return s;
}

inline std::vector<Step> greedy_all(std::initializer_list<const char*> vs) {
    std::vector<Step> out;
    for (const char* v : vs) out.push_back(greedy(v));
    return out;
}

inline Step branch(std::string text, ColorTest test, std::vector<Step> then_steps, std::vector<Step> else_steps) {
    Step s;
    s.kind = Step::Kind::branch;
    s.test_text = std::move(text);
    s.test = std::move(test);
    s.then_steps = std::move(then_steps);
    s.else_steps = std::move(else_steps);
    return s;
}

inline ColorTest same(Vertex a, Vertex b) {
    return [a = std::move(a), b = std::move(b)](const Coloring& c) { return c.at(a) == c.at(b); };
}

inline ColorTest distinct_count_is(std::vector<Vertex> vs, int k) {
    return [vs = std::move(vs), k](const Coloring& c) {
        int seen = 0;
        for (const auto& v : vs) seen |= 1 << (c.at(v) - 1);
        return std::popcount(static_cast<unsigned>(seen)) == k;
    };
}

}  // namespace recipe

/// Runs the schedule from `base`. Returns the coloring of `local` (phantom
/// colors dropped), or none when a greedy step finds no color or a forced
/// color clashes with a colored neighbor.
inline std::optional<Coloring> run_recipe(const Recipe& r, const Coloring& base) {
    Coloring c = base;
    bool ok = true;
    std::function<void(const std::vector<Step>&)> run = [&](const std::vector<Step>& steps) {
        for (const auto& s : steps) {
            if (!ok) return;
            switch (s.kind) {
                case Step::Kind::branch:
                    run(s.test(c) ? s.then_steps : s.else_steps);
                    break;
                case Step::Kind::force:
                case Step::Kind::greedy: {
                    if (!r.local.contains(s.vertex)) throw input_error("recipe '" + r.name + "' colors unknown vertex '" + s.vertex + "'");
                    if (c.count(s.vertex)) throw input_error("recipe '" + r.name + "' colors '" + s.vertex + "' twice");
                    const int col = s.kind == Step::Kind::force ? s.color(c) : least_available(r.local, c, s.vertex);
                    if (col < 1 || col > kColors) {
                        ok = false;
                        return;
                    }
                    for (const auto& w : r.local.neighbors(s.vertex)) {
                        if (auto it = c.find(w); it != c.end() && it->second == col) ok = false;
                    }
                    c[s.vertex] = col;
                    break;
                }
            }
        }
    };
    run(r.steps);
    if (!ok) return std::nullopt;
    for (const auto& p : r.phantom) c.erase(p);
    if (!is_total(r.local, c) || !is_proper(r.local, c)) return std::nullopt;
    return c;
}

struct RecipeCheck {
    std::string name;
    std::size_t cases = 0;
    std::vector<Coloring> failures;
};

/// Every coloring of boundary and phantom vertices that respects the palette,
/// the constraints and the local edges among them is fed to the schedule.
inline RecipeCheck verify_recipe(const Recipe& r) {
    std::vector<Vertex> slots = r.boundary;
    slots.insert(slots.end(), r.phantom.begin(), r.phantom.end());
    if (slots.size() > 10) throw resource_limit_error("recipe '" + r.name + "' has too many boundary vertices");
    std::vector<int> limit;
    for (const auto& v : slots) {
        auto it = r.palette.find(v);
        limit.push_back(it == r.palette.end() ? kColors : it->second);
    }
    RecipeCheck out{r.name, 0, {}};
    std::vector<int> col(slots.size(), 1);
    while (true) {
        Coloring base;
        for (std::size_t i = 0; i < slots.size(); ++i) base[slots[i]] = col[i];
        bool admissible = true;
        for (const auto& e : r.constraints) admissible = admissible && base.at(e.u) != base.at(e.v);
        for (const auto& e : r.local.edges()) {
            auto a = base.find(e.u), b = base.find(e.v);
            if (a != base.end() && b != base.end() && a->second == b->second) admissible = false;
        }
        if (admissible) {
            ++out.cases;
            if (!run_recipe(r, base)) out.failures.push_back(base);
        }
        std::size_t i = 0;
        while (i < slots.size() && col[i] == limit[i]) col[i++] = 1;
        if (i == slots.size()) break;
        ++col[i];
    }
    return out;
}

namespace detail {

inline Graph with_vertices(const Graph& g, const std::vector<Vertex>& extra, const EdgeSet& edges) {
    return add(g, VertexSet(extra.begin(), extra.end()), edges);
}

/// The configuration of `gadget` restricted to `recolored` and its neighbors.
inline Graph around(const Graph& config, const VertexSet& recolored) {
    VertexSet keep = recolored;
    for (const auto& v : recolored) {
        for (const auto& w : config.neighbors(v)) keep.insert(w);
    }
    return config.induced(keep);
}

inline std::vector<Vertex> outside(const Graph& local, const VertexSet& recolored) {
    std::vector<Vertex> out;
    for (const auto& v : local.vertices()) {
        if (!recolored.count(v)) out.push_back(v);
    }
    return out;
}

inline Recipe from_gadget(std::string name, std::string summary, const Gadget& gd, VertexSet recolored,
                          std::vector<Step> steps, Graph config_override = {}) {
    Recipe r;
    r.name = std::move(name);
    r.summary = std::move(summary);
    const Graph& config = config_override.vertex_count() ? config_override : gd.config.graph();
    r.local = around(config, recolored);
    r.boundary = outside(r.local, recolored);
    for (const auto& v : gd.rule.insert_vertices) r.phantom.push_back(v);
    for (const auto& e : gd.rule.insert_edges) r.constraints.insert(e);
    r.steps = std::move(steps);
    return r;
}

inline Recipe rim_recipe(std::string name, std::string summary, const Rim& rm, std::vector<Step> steps) {
    Recipe r;
    r.name = std::move(name);
    r.summary = std::move(summary);
    r.local = config_graph(names("t", 5), rm.interior, rm.adj).graph();
    r.boundary = names("t", 5);
    for (const auto& t : r.boundary) r.palette[t] = 3;
    r.steps = std::move(steps);
    return r;
}

inline std::vector<Step> concat(std::vector<Step> a, const std::vector<Step>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline std::vector<Recipe> build_recipes() {
    using namespace recipe;
    std::vector<Recipe> out;

    out.push_back(from_gadget(
        "two-vertex", "v2 repeats a neighbor color: greedy v, u; otherwise v takes v2's color",
        gadget("two-vertex-shortcut"), {"u", "v"},
        {branch("v2 colored like v1 or v3",
                [](const Coloring& c) { return c.at("v2") == c.at("v1") || c.at("v2") == c.at("v3"); },
                greedy_all({"v", "u"}), {force_as("v", "v2"), greedy("u")})}));

    for (const char* g : {"triangle-fan", "triangle-pair"}) {
        out.push_back(from_gadget(g, "v takes v5's color, then greedy w, u", gadget(g), {"u", "v", "w"},
                                  {force_as("v", "v5"), greedy("w"), greedy("u")}));
    }

    out.push_back(from_gadget("path-shortcut", "v takes t1's color, then greedy u, w", gadget("path-shortcut"),
                              {"u", "v", "w"}, {force_as("v", "t1"), greedy("u"), greedy("w")}));

    {
        const Gadget& gd = gadget("path-identify");
        Graph config = with_vertices(gd.config.graph(), {"g"}, {Edge("g", "t1")});
        out.push_back(from_gadget("path-identify", "u and w take vstar's color, then greedy v, t1", gd,
                                  {"t1", "u", "v", "w"},
                                  {force_as("u", "vstar"), force_as("w", "vstar"), greedy("v"), greedy("t1")},
                                  config));
    }

    {
        const Gadget& gd = gadget("chorded-square");
        const std::vector<Vertex> ts = names("t", 4);
        auto four = [&] {
            return std::vector<Step>{force_as("u1", "t4"), force_as("u2", "t1"), force_as("u3", "t2"), force_as("u4", "t3")};
        };
        Graph square = remove(gd.config.graph(), VertexEdgeSet{{}, {Edge("u2", "u4")}});
        Recipe plain = from_gadget("square", "four boundary colors rotate onto the square; otherwise u1, u3 take a missing color",
                                   gd, {"u1", "u2", "u3", "u4"},
                                   {branch("t1..t4 use four colors", distinct_count_is(ts, 4), four(),
                                           {force("u1", absent_from(ts)), force("u3", absent_from(ts)), greedy("u2"), greedy("u4")})},
                                   square);
        plain.constraints.clear();
        out.push_back(std::move(plain));
        out.push_back(from_gadget(
            "chorded-square", "rotate on four colors; otherwise u2, u4 copy two triangle colors",
            gd, {"u1", "u2", "u3", "u4"},
            {branch("t1..t4 use four colors", distinct_count_is(ts, 4), four(),
                    {branch("t4 colored like t1 or t2",
                            [](const Coloring& c) { return c.at("t4") == c.at("t1") || c.at("t4") == c.at("t2"); },
                            {force_as("u2", "t1"), force_as("u4", "t3"), greedy("u1"), greedy("u3")},
                            {force_as("u2", "t1"), force_as("u4", "t2"), greedy("u1"), greedy("u3")})})}));
    }

    out.push_back(from_gadget("corner-shortcut", "v5 takes x's color, then greedy v4, w5", gadget("corner-shortcut"),
                              {"v4", "v5", "w5"}, {force_as("v5", "x"), greedy("v4"), greedy("w5")}));

    {
        const Gadget& gd = gadget("corner-apex");
        out.push_back(from_gadget(
            "corner-apex", "v2, v5 take the apex color; greedy v3, v4, x; then v1 and w5 around t5's color", gd,
            gd.rule.remove.vertices,
            {force_as("v2", "apex"), force_as("v5", "apex"), greedy("v3"), greedy("v4"), greedy("x"),
             branch("x colored like t5", same("x", "t5"), greedy_all({"v1", "w5"}), {force_as("v1", "t5"), greedy("w5")})}));
    }

    auto fours = [](std::initializer_list<const char*> vs) {
        std::vector<Step> s;
        for (const char* v : vs) s.push_back(force(v, constant(4)));
        return s;
    };

    out.push_back(rim_recipe(
        "rim-no-edges", "every rim branch vertex gets 4; the middle vertices are 3-colored greedily",
        rim({"v1", "a1", "v2", "a2", "v3", "a3", "v4", "a4", "v5", "a5"},
            {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"}, {"a5", "a1"}, {"a1", "a3"}, {"a1", "a4"}}),
        concat(fours({"v1", "v2", "v3", "v4", "v5"}), greedy_all({"a1", "a3", "a4", "a2", "a5"}))));

    out.push_back(rim_recipe(
        "rim-one-edge", "v2..v5 get 4; v1 avoids t1 and t5; middle vertices greedy",
        rim({"v1", "v2", "a2", "v3", "a3", "v4", "a4", "v5", "a5"},
            {{"a2", "a3"}, {"a2", "a4"}, {"a2", "a5"}, {"a3", "a4"}, {"a4", "a5"}}),
        concat(fours({"v2", "v3", "v4", "v5"}), greedy_all({"v1", "a5", "a4", "a2", "a3"}))));

    out.push_back(rim_recipe(
        "rim-two-edges", "v2..v5 get 4; v1 avoids t1 and t5; middle vertices greedy",
        rim({"v1", "v2", "a2", "v3", "a3", "v4", "a4", "v5"}, {{"a2", "a3"}, {"a3", "a4"}, {"a2", "a4"}}),
        concat(fours({"v2", "v3", "v4", "v5"}), greedy_all({"v1", "a2", "a3", "a4"}))));

    for (auto [suffix, a_to] : {std::pair{"", "v5"}, std::pair{"-b", "v4"}}) {
        std::vector<Step> s{force_as("a", "t4")};
        s = concat(s, fours({"v1", "v2", "v4"}));
        s = concat(s, greedy_all({"v5", "v3", "b"}));
        out.push_back(rim_recipe(std::string("rim-three-run") + suffix,
                                 "a copies t4; v1, v2, v4 get 4; greedy v5, v3, b",
                                 rim({"v1", "a", "v2", "b", "v3", "v4", "v5"}, {{"a", "b"}, {"b", "v4"}, {"a", a_to}}),
                                 s));
    }

    out.push_back(rim_recipe("rim-three-split", "v1, v2, v4 get 4; greedy v5, v3, b, a",
                             rim({"v1", "a", "v2", "v3", "b", "v4", "v5"}, {{"a", "b"}, {"b", "v2"}, {"a", "v4"}}),
                             concat(fours({"v1", "v2", "v4"}), greedy_all({"v5", "v3", "b", "a"}))));

    out.push_back(rim_recipe("rim-four-open", "without v3v5: v1, v2, v4 get 4; greedy v3, v5, a", fan_rim(false),
                             concat(fours({"v1", "v2", "v4"}), greedy_all({"v3", "v5", "a"}))));

    out.push_back(from_gadget("fan-shortcut", "a takes t1's color, then greedy v1, v2", gadget("fan-shortcut"),
                              {"a", "v1", "v2"}, {force_as("a", "t1"), greedy("v1"), greedy("v2")}));

    {
        const Gadget& gd = gadget("pentagon-triangle");
        const std::vector<std::pair<const char*, EdgeSet>> variants{
            {"", {}},
            {"-no-v4v2", {Edge("v4", "v2")}},
            {"-no-v4v1", {Edge("v4", "v1")}},
            {"-no-chords", {Edge("v4", "v1"), Edge("v4", "v2")}},
        };
        for (const auto& [suffix, drop] : variants) {
            Graph config = remove(gd.config.graph(), VertexEdgeSet{{}, drop});
            out.push_back(from_gadget(
                std::string("pentagon-triangle") + suffix,
                "v4 copies t1; on t2=t3 or t4=t5 greedy around, else v2, v1 copy t3, t4", gd,
                {"v1", "v2", "v3", "v4", "v5"},
                {branch("t2 colored like t3", same("t2", "t3"),
                        {force_as("v4", "t1"), greedy("v5"), greedy("v1"), greedy("v2"), greedy("v3")},
                        {branch("t4 colored like t5", same("t4", "t5"),
                                {force_as("v4", "t1"), greedy("v3"), greedy("v2"), greedy("v1"), greedy("v5")},
                                {force_as("v4", "t1"), force_as("v2", "t3"), force_as("v1", "t4"), greedy("v3"),
                                 greedy("v5")})})},
                config));
        }
    }

    out.push_back(from_gadget("nine-vertex-collapse", "z, u, v copy r, p, t; greedy q, w", gadget("nine-vertex-collapse"),
                              {"q", "z", "u", "v", "w"},
                              {force_as("z", "r"), force_as("u", "p"), force_as("v", "t"), greedy("q"), greedy("w")}));
    return out;
}

}  // namespace detail

inline const std::vector<Recipe>& recipe_library() {
    static const std::vector<Recipe> lib = detail::build_recipes();
    return lib;
}

inline const Recipe& recipe_named(std::string_view name) {
    for (const auto& r : recipe_library()) {
        if (r.name == name) return r;
    }
    throw input_error("unknown recipe '" + std::string(name) + "'");
}

}  // namespace wheels
