#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wheels/generate.hpp"
#include "wheels/io.hpp"
#include "wheels/linkage.hpp"
#include "wheels/subdivision.hpp"

using namespace wheels;
using namespace wheels::make;

namespace {

std::size_t total_length(const PathSystem& ps) {
    std::size_t n = 0;
    for (const auto& p : ps.paths) n += p.size() - 1;
    return n;
}

Graph random_small(Rng& rng, std::size_t n_min, std::size_t n_max, double p) {
    std::vector<Vertex> ids;
    const std::size_t n = n_min + rng.below(n_max - n_min + 1);
    for (std::size_t j = 0; j < n; ++j) ids.push_back(std::to_string(j));
    return random_graph(ids, p, rng);
}

// W4 (center w, rim c1..c4) with x on c1..c3 and y on c2..c4.
Graph crossed_w4() {
    return add(wheel(4), {"x", "y"}, {Edge("x", "c1"), Edge("x", "c3"), Edge("y", "c2"), Edge("y", "c4")});
}

Wheel w4() {
    Wheel w;
    w.center = "w";
    w.rim = {"c1", "c2", "c3", "c4"};
    w.spokes = {"c1", "c2", "c3", "c4"};
    return w;
}

}  // namespace

TEST(Linkage, Examples) {
    const Graph c4 = Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    EXPECT_FALSE(find_disjoint_paths(c4, {{"a", "c"}, {"b", "d"}}).has_value());

    const Graph k5 = Graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"a", "e"}, {"b", "c"},
                                                       {"b", "e"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
    const auto ps = find_disjoint_paths(k5, {{"a", "c"}, {"b", "d"}});
    ASSERT_TRUE(ps.has_value());
    EXPECT_TRUE(is_valid_path_system(k5, *ps));

    const Graph g = grid(3, 3);
    const auto corner = find_disjoint_paths(g, {{"0", "8"}});
    ASSERT_TRUE(corner.has_value());
    EXPECT_EQ(total_length(*corner), 4U);
}

TEST(Linkage, InputErrors) {
    const Graph g = cycle(4);
    EXPECT_THROW(find_disjoint_paths(g, {{"0", "0"}}), input_error);
    EXPECT_THROW(find_disjoint_paths(g, {{"0", "2"}}, {"0"}), input_error);
    EXPECT_THROW(find_disjoint_paths(g, {{"0", "2"}, {"2", "0"}}), input_error);
    EXPECT_THROW(find_disjoint_paths(g, {{"0", "9"}}), input_error);
    EXPECT_THROW(find_disjoint_paths(grid(4, 4), {{"0", "15"}}), resource_limit_error);
}

TEST(Linkage, AgreesWithOracle) {
    Rng rng(23);
    int linked = 0;
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_small(rng, 4, 8, 0.25 + 0.05 * static_cast<double>(i % 8));
        const std::size_t n = g.vertex_count();
        const std::size_t k = 1 + rng.below(std::min<std::size_t>(3, n / 2));
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::vector<std::pair<int, int>> idx;
        for (std::size_t j = 0; j < k; ++j) {
            pairs.emplace_back(g.id(static_cast<int>(perm[2 * j])), g.id(static_cast<int>(perm[2 * j + 1])));
            idx.emplace_back(static_cast<int>(perm[2 * j]), static_cast<int>(perm[2 * j + 1]));
        }
        VertexSet forbidden;
        std::vector<int> forbidden_idx;
        if (2 * k < n && rng.chance(0.3)) {
            forbidden.insert(g.id(static_cast<int>(perm[2 * k])));
            forbidden_idx.push_back(static_cast<int>(perm[2 * k]));
        }
        const auto ps = find_disjoint_paths(g, pairs, forbidden);
        const auto best = oracle::min_linkage(g, idx, forbidden_idx);
        ASSERT_EQ(ps.has_value(), best.has_value()) << io::to_edge_list(g);
        if (ps) {
            ++linked;
            EXPECT_TRUE(is_valid_path_system(g, *ps, forbidden));
            EXPECT_EQ(total_length(*ps), *best) << io::to_edge_list(g);
        }
    }
    EXPECT_GT(linked, 50);
}

TEST(K5, Examples) {
    const auto s = find_k5_subdivision(complete(5));
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(is_valid_subdivision(complete(5), *s));
    for (const auto& p : s->paths) EXPECT_EQ(p.size(), 2U);

    EXPECT_FALSE(find_k5_subdivision(petersen()).has_value());
    EXPECT_FALSE(find_k5_subdivision(octahedron()).has_value());
    EXPECT_FALSE(find_k5_subdivision(icosahedron(), SearchLimits{12}).has_value());
    EXPECT_THROW(find_k5_subdivision(icosahedron(), SearchLimits{11}), resource_limit_error);
}

TEST(K5, SubdividedK5) {
    const auto doc = io::parse_graph_text("7\n0 5\n5 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 6\n6 3\n2 4\n3 4\n");
    const auto s = find_k5_subdivision(doc.graph);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(is_valid_subdivision(doc.graph, *s));
    EXPECT_EQ(VertexSet(s->branch.begin(), s->branch.end()), (VertexSet{"0", "1", "2", "3", "4"}));
}

TEST(K5, ValidatorRejectsBrokenWitnesses) {
    const Graph k5 = complete(5);
    const Subdivision good = *find_k5_subdivision(k5);

    Subdivision dup = good;
    dup.branch[1] = dup.branch[0];
    EXPECT_FALSE(is_valid_subdivision(k5, dup));

    Subdivision missing = good;
    missing.paths[3] = {missing.paths[3].front()};
    EXPECT_FALSE(is_valid_subdivision(k5, missing));

    const Graph sub = crossed_w4();
    Subdivision through_branch;
    through_branch.branch = {"w", "c1", "c2", "c3", "c4"};
    EXPECT_FALSE(is_valid_subdivision(sub, through_branch));

    EXPECT_FALSE(is_valid_subdivision(remove(k5, VertexEdgeSet{{}, {Edge(k5.id(0), k5.id(1))}}), good));
}

TEST(K5, AgreesWithOracle) {
    Rng rng(31);
    int found = 0;
    for (int i = 0; i < 250; ++i) {
        const Graph g = random_small(rng, 5, 8, 0.45 + 0.05 * static_cast<double>(i % 10));
        const auto s = find_k5_subdivision(g);
        EXPECT_EQ(s.has_value(), oracle::has_k5_subdivision(g)) << io::to_edge_list(g);
        if (s) {
            ++found;
            EXPECT_TRUE(is_valid_subdivision(g, *s)) << subdivision_defect(g, *s);
        }
    }
    EXPECT_GT(found, 30);
}

TEST(K5, PlanarGraphsHaveNone) {
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_planar(5 + rng.below(8), 0.1, rng);
        EXPECT_FALSE(find_k5_subdivision(g).has_value());
    }
}

TEST(K5, ManyWitnesses) {
    const Graph g = complete(6);
    const auto all = find_k5_subdivisions(g, 100);
    EXPECT_EQ(all.size(), 6U);
    for (const auto& s : all) EXPECT_TRUE(is_valid_subdivision(g, s));
    EXPECT_EQ(find_k5_subdivisions(g, 2).size(), 2U);
}

TEST(WheelToK5, CrossedW4) {
    const Graph g = crossed_w4();
    PathSystem ps;
    ps.pairs = {{"c1", "c3"}, {"c2", "c4"}};
    ps.paths = {{"c1", "x", "c3"}, {"c2", "y", "c4"}};
    const Subdivision s = wheel_plus_paths_to_k5(g, w4(), {"c1", "c2", "c3", "c4"}, ps);
    EXPECT_TRUE(is_valid_subdivision(g, s));
    EXPECT_EQ(s.branch[0], "w");
    EXPECT_TRUE(find_k5_subdivision(g).has_value());
}

TEST(WheelToK5, SharedInteriorRejected) {
    Graph g = add(wheel(4), {"x"}, {Edge("x", "c1"), Edge("x", "c2"), Edge("x", "c3"), Edge("x", "c4")});
    PathSystem ps;
    ps.pairs = {{"c1", "c3"}, {"c2", "c4"}};
    ps.paths = {{"c1", "x", "c3"}, {"c2", "x", "c4"}};
    EXPECT_THROW(wheel_plus_paths_to_k5(g, w4(), {"c1", "c2", "c3", "c4"}, ps), construction_error);
}

TEST(WheelToK5, ThreeSpokesRejected) {
    const Graph g = remove(crossed_w4(), VertexEdgeSet{{}, {Edge("w", "c4")}});
    Wheel w = w4();
    w.spokes.erase("c4");
    PathSystem ps;
    ps.pairs = {{"c1", "c3"}, {"c2", "c4"}};
    ps.paths = {{"c1", "x", "c3"}, {"c2", "y", "c4"}};
    EXPECT_THROW(wheel_plus_paths_to_k5(g, w, {"c1", "c2", "c3", "c4"}, ps), precondition_error);
}

TEST(WheelToK5, SpokesOutOfOrderRejected) {
    const Graph g = crossed_w4();
    PathSystem ps;
    ps.pairs = {{"c1", "c2"}, {"c3", "c4"}};
    ps.paths = {{"c1", "c2"}, {"c3", "c4"}};
    EXPECT_THROW(wheel_plus_paths_to_k5(g, w4(), {"c1", "c3", "c2", "c4"}, ps), precondition_error);
}
