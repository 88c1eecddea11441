#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wheels/catalog.hpp"
#include "wheels/generate.hpp"
#include "wheels/io.hpp"
#include "wheels/wheel.hpp"

using namespace wheels;
using namespace wheels::make;

namespace {

Wheel w4() {
    Wheel w;
    w.center = "w";
    w.rim = {"c1", "c2", "c3", "c4"};
    w.spokes = {"c1", "c2", "c3", "c4"};
    return w;
}

}  // namespace

TEST(IsWheel, Examples) {
    EXPECT_TRUE(is_wheel(wheel(4), w4()));

    // two spokes only
    const Graph c5 = cycle(5, "c");
    const Graph two = add(c5, {"w"}, {Edge("w", "c1"), Edge("w", "c3")});
    Wheel w;
    w.center = "w";
    w.rim = {"c1", "c2", "c3", "c4", "c5"};
    w.spokes = {"c1", "c3"};
    EXPECT_FALSE(is_wheel(two, w));

    Wheel bad = w4();
    bad.rim = {"c1", "c3", "c2", "c4"};
    EXPECT_FALSE(is_wheel(wheel(4), bad));

    Wheel fake = w4();
    fake.spokes.insert("w");
    EXPECT_FALSE(is_wheel(wheel(4), fake));
}

TEST(IsSGood, Examples) {
    const Graph g = add(wheel(4), {"t"}, {Edge("t", "c1"), Edge("t", "c2")});
    EXPECT_TRUE(is_s_good(g, w4(), {"t"}));
    EXPECT_TRUE(is_s_good(g, w4(), {"c1", "c3"}));

    // rim terminal not adjacent to the center
    const Graph h = add(cycle(5, "c"), {"w"}, {Edge("w", "c1"), Edge("w", "c2"), Edge("w", "c3")});
    Wheel w;
    w.center = "w";
    w.rim = {"c1", "c2", "c3", "c4", "c5"};
    w.spokes = {"c1", "c2", "c3"};
    ASSERT_TRUE(is_wheel(h, w));
    EXPECT_FALSE(is_s_good(h, w, {"c5"}));
    EXPECT_THROW(is_s_good(h, w, {"w"}), input_error);
}

TEST(FindSGoodWheel, CatalogHasNone) {
    for (const auto& m : catalog()) {
        EXPECT_FALSE(find_s_good_wheel(m.tg).has_value()) << m.name;
        EXPECT_FALSE(oracle::has_s_good_wheel(m.tg.graph(), m.tg.terminals())) << m.name;
    }
}

TEST(FindSGoodWheel, W2HasNoWheelAtAll) {
    const auto& w2 = catalog_member("W2");
    EXPECT_FALSE(find_s_good_wheel(TerminalGraph(w2.tg.graph(), {}, false)).has_value());
    EXPECT_FALSE(oracle::has_s_good_wheel(w2.tg.graph(), {}));
}

TEST(FindSGoodWheel, IcosahedronAndCycle) {
    const auto w = find_s_good_wheel(TerminalGraph(icosahedron(), {}, false));
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_wheel(icosahedron(), *w));

    const Graph c5 = cycle(5);
    EXPECT_FALSE(find_s_good_wheel(TerminalGraph(c5, c5.vertices(), false)).has_value());
}

TEST(FindSGoodWheel, ResourceLimit) {
    EXPECT_THROW(find_s_good_wheel(TerminalGraph(grid(4, 4), {}, false)), resource_limit_error);
    EXPECT_NO_THROW(find_s_good_wheel(TerminalGraph(grid(4, 4), {}, false), SearchLimits{16}));
}

TEST(FindSGoodWheel, AgreesWithOracle) {
    Rng rng(17);
    int found = 0;
    for (int i = 0; i < 250; ++i) {
        std::vector<Vertex> ids;
        const std::size_t n = 4 + rng.below(5);
        for (std::size_t j = 0; j < n; ++j) ids.push_back("x" + std::to_string(j));
        const Graph g = random_graph(ids, 0.3 + 0.05 * static_cast<double>(i % 8), rng);
        std::vector<Vertex> ts;
        for (const auto& v : ids) {
            if (rng.chance(0.4)) ts.push_back(v);
        }
        const TerminalGraph tg(g, ts, false);
        const auto w = find_s_good_wheel(tg);
        EXPECT_EQ(w.has_value(), oracle::has_s_good_wheel(g, ts)) << io::to_edge_list(tg);
        if (w) {
            ++found;
            EXPECT_TRUE(is_wheel(g, *w));
            EXPECT_TRUE(is_s_good(g, *w, VertexSet(ts.begin(), ts.end())));
        }
    }
    EXPECT_GT(found, 20);
}

TEST(WheelFromCofacial, Examples) {
    const Graph ico = icosahedron();
    const Embedding e = embed(ico);
    const auto w = wheel_from_cofacial(e, ico.id(3));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->rim.size(), 5U);
    EXPECT_EQ(w->spokes.size(), 5U);

    const Graph c5 = cycle(5);
    EXPECT_FALSE(wheel_from_cofacial(embed(c5), c5.id(0)).has_value());

    // bowtie: the shared vertex is a cut vertex
    const Graph bow = Graph::with_indices(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    EXPECT_FALSE(wheel_from_cofacial(embed(bow), "0").has_value());
}
