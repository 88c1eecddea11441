#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wheels/experiments.hpp"
#include "wheels/gadget_library.hpp"
#include "wheels/io.hpp"

using namespace wheels;
using namespace wheels::make;

namespace {

// The configuration plus every terminal pair not inserted by the rule.
Graph saturated(const Gadget& gd) {
    const auto& ts = gd.config.terminals();
    EdgeSet es;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            const Edge e(ts[i], ts[j]);
            if (!gd.rule.insert_edges.count(e) && !gd.config.graph().adjacent(ts[i], ts[j])) es.insert(e);
        }
    }
    return add(gd.config.graph(), {}, es);
}

Subdivision direct_k5(const std::array<Vertex, 5>& b) {
    Subdivision s;
    s.branch = b;
    for (std::size_t k = 0; k < kK5Edges.size(); ++k) {
        s.paths[k] = {b[static_cast<std::size_t>(kK5Edges[k].first)], b[static_cast<std::size_t>(kK5Edges[k].second)]};
    }
    return s;
}

}  // namespace

TEST(Gadgets, LibraryIsWellFormed) {
    const auto& lib = gadget_library();
    ASSERT_EQ(lib.size(), 13U);
    std::set<std::string> seen;
    for (const auto& gd : lib) {
        EXPECT_TRUE(seen.insert(gd.rule.name).second) << gd.rule.name;
        EXPECT_EQ(gadget_rule_defect(gd.rule), "") << gd.rule.name;
        EXPECT_FALSE(gd.rule.options.empty()) << gd.rule.name;
        EXPECT_FALSE(gd.rule.summary.empty()) << gd.rule.name;
        EXPECT_TRUE(is_disc_planar(gd.config)) << gd.rule.name;
        for (const auto& v : gd.rule.remove.vertices) {
            EXPECT_TRUE(gd.config.graph().contains(v)) << gd.rule.name;
            // a removed boundary vertex needs its host degree pinned
            if (gd.config.is_terminal(v)) EXPECT_TRUE(gd.outside_degree.count(v)) << gd.rule.name;
        }
        EXPECT_NO_THROW(apply_gadget(gd.config.graph(), gd.rule)) << gd.rule.name;
    }
    EXPECT_THROW(gadget("nothing"), input_error);
}

TEST(Gadgets, DefectsAreReported) {
    GadgetRule r = gadget("path-shortcut").rule;
    r.options[0].replace.begin()->second = {"t1", "t2", "t3"};
    EXPECT_NE(gadget_rule_defect(r), "");
    r = gadget("path-shortcut").rule;
    r.options[0].replace.begin()->second = {"t1", "u", "t5"};
    EXPECT_NE(gadget_rule_defect(r), "");
    r = gadget("path-shortcut").rule;
    r.insert_edges.insert(Edge("u", "t2"));
    EXPECT_NE(gadget_rule_defect(r), "");
}

TEST(Gadgets, TwoVertexShortcut) {
    const auto& gd = gadget("two-vertex-shortcut");
    const Graph reduced = apply_gadget(gd.config.graph(), gd.rule);
    EXPECT_FALSE(reduced.contains("u"));
    EXPECT_FALSE(reduced.contains("v"));
    EXPECT_TRUE(reduced.adjacent("v2", "v4"));
    EXPECT_EQ(reduced.edge_count(), 1U);
}

TEST(Gadgets, EmptyRuleIsIdentity) {
    const Graph g = petersen();
    EXPECT_EQ(apply_gadget(g, GadgetRule{}).edges(), g.edges());
    EXPECT_EQ(apply_gadget(g, GadgetRule{}).vertices(), g.vertices());
}

TEST(Lifting, UnusedInsertedEdgesLeaveWitnessAlone) {
    const auto& gd = gadget("path-shortcut");
    const Graph g = graph_union(gd.config.graph(), complete(5, "a"));
    const Subdivision t = direct_k5({"a1", "a2", "a3", "a4", "a5"});
    const LiftResult lr = lift_subdivision_traced(g, gd.rule, t);
    EXPECT_EQ(lr.option, "unchanged");
    EXPECT_EQ(lr.subdivision.paths, t.paths);
}

TEST(Lifting, PathShortcutRoutesThroughInterior) {
    const auto& gd = gadget("path-shortcut");
    const Graph g = saturated(gd);
    const Graph reduced = apply_gadget(g, gd.rule);
    EXPECT_EQ(reduced.edges(), complete(5, "t").edges());
    const Subdivision t = direct_k5({"t1", "t2", "t3", "t4", "t5"});
    const LiftResult lr = lift_subdivision_traced(g, gd.rule, t);
    EXPECT_TRUE(is_valid_subdivision(g, lr.subdivision));
    EXPECT_FALSE(lr.extracted);
    std::set<std::vector<Vertex>> paths(lr.subdivision.paths.begin(), lr.subdivision.paths.end());
    EXPECT_TRUE(paths.count({"t1", "u", "t3"}));
    EXPECT_TRUE(paths.count({"t1", "w", "t4"}));
}

TEST(Lifting, NoOptionsFails) {
    const auto& gd = gadget("path-shortcut");
    GadgetRule bare = gd.rule;
    bare.options.clear();
    const Graph g = saturated(gd);
    EXPECT_THROW(lift_subdivision(g, bare, direct_k5({"t1", "t2", "t3", "t4", "t5"})), lifting_failure);
}

TEST(Lifting, RejectsForeignWitness) {
    const auto& gd = gadget("path-shortcut");
    const Graph g = saturated(gd);
    Subdivision t = direct_k5({"t1", "t2", "t3", "t4", "t5"});
    t.paths[0] = {"t1", "u", "t2"};
    EXPECT_THROW(lift_subdivision(g, gd.rule, t), precondition_error);
}

TEST(Lifting, SaturatedHostsForEveryRule) {
    for (const auto& gd : gadget_library()) {
        const Graph g = saturated(gd);
        const Graph reduced = apply_gadget(g, gd.rule);
        const auto witnesses = find_k5_subdivisions(reduced, 6, SearchLimits{kDenseCapacity});
        for (const auto& t : witnesses) {
            Subdivision s;
            ASSERT_NO_THROW(s = lift_subdivision(g, gd.rule, t)) << gd.rule.name;
            EXPECT_TRUE(is_valid_subdivision(g, s)) << gd.rule.name << ": " << subdivision_defect(g, s);
        }
    }
}

TEST(Lifting, RandomHostsAgreeWithOracle) {
    std::size_t checked = 0;
    for (const auto& gd : gadget_library()) {
        Rng rng(100 + gd.rule.name.size());
        for (int i = 0; i < 6; ++i) {
            const Graph g = experiments::gadget_host(gd, rng, 0.6 + 0.05 * i);
            const Graph reduced = apply_gadget(g, gd.rule);
            const auto t = find_k5_subdivision(reduced, SearchLimits{kDenseCapacity});
            if (!t) continue;
            const Subdivision s = lift_subdivision(g, gd.rule, *t);
            EXPECT_TRUE(is_valid_subdivision(g, s)) << gd.rule.name << "\n" << io::to_edge_list(g);
            if (g.vertex_count() <= 11) {
                EXPECT_TRUE(oracle::has_k5_subdivision(g)) << gd.rule.name;
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 5U);
}
