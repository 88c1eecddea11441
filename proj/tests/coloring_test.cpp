#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wheels/coloring.hpp"
#include "wheels/generate.hpp"
#include "wheels/io.hpp"
#include "wheels/recipes.hpp"

using namespace wheels;
using namespace wheels::make;

namespace {

bool proper_total(const Graph& g, const Coloring& c) {
    for (const auto& v : g.vertices()) {
        auto it = c.find(v);
        if (it == c.end() || it->second < 1 || it->second > 4) return false;
    }
    for (const auto& e : g.edges()) {
        if (c.at(e.u) == c.at(e.v)) return false;
    }
    return true;
}

// Admissible boundary colorings counted straight from the definition, with
// each schedule result checked here rather than by the library.
std::pair<std::size_t, std::size_t> recount(const Recipe& r) {
    std::vector<Vertex> slots = r.boundary;
    slots.insert(slots.end(), r.phantom.begin(), r.phantom.end());
    std::size_t total = 1;
    std::vector<int> limit;
    for (const auto& v : slots) {
        limit.push_back(r.palette.count(v) ? r.palette.at(v) : 4);
        total *= static_cast<std::size_t>(limit.back());
    }
    std::size_t cases = 0, failures = 0;
    for (std::size_t code = 0; code < total; ++code) {
        Coloring base;
        std::size_t x = code;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            base[slots[i]] = 1 + static_cast<int>(x % static_cast<std::size_t>(limit[i]));
            x /= static_cast<std::size_t>(limit[i]);
        }
        bool ok = true;
        for (const auto& e : r.constraints) ok = ok && base[e.u] != base[e.v];
        for (const auto& e : r.local.edges()) {
            if (base.count(e.u) && base.count(e.v) && base[e.u] == base[e.v]) ok = false;
        }
        if (!ok) continue;
        ++cases;
        const auto out = run_recipe(r, base);
        bool good = out && proper_total(r.local, *out);
        if (good) {
            for (const auto& v : r.boundary) good = good && out->at(v) == base.at(v);
        }
        failures += good ? 0 : 1;
    }
    return {cases, failures};
}

}  // namespace

TEST(FourColor, Examples) {
    const auto k4 = four_color(complete(4));
    ASSERT_TRUE(k4.has_value());
    EXPECT_TRUE(proper_total(complete(4), *k4));
    EXPECT_FALSE(four_color(complete(5)).has_value());
    const auto w5 = four_color(wheel(5));
    ASSERT_TRUE(w5.has_value());
    EXPECT_TRUE(proper_total(wheel(5), *w5));
    EXPECT_TRUE(four_color(icosahedron()).has_value());
}

TEST(FourColor, AgreesWithOracle) {
    Rng rng(3);
    int colorable = 0, not_colorable = 0;
    for (int i = 0; i < 250; ++i) {
        std::vector<Vertex> ids;
        const std::size_t n = 1 + rng.below(8);
        for (std::size_t j = 0; j < n; ++j) ids.push_back(std::to_string(j));
        const Graph g = random_graph(ids, 0.4 + 0.06 * static_cast<double>(i % 10), rng);
        const auto c = four_color(g);
        ASSERT_EQ(c.has_value(), oracle::four_colorable(g)) << io::to_edge_list(g);
        if (c) {
            ++colorable;
            EXPECT_TRUE(proper_total(g, *c));
        } else {
            ++not_colorable;
        }
    }
    EXPECT_GT(not_colorable, 5);
    EXPECT_GT(colorable, 50);
}

TEST(ExtendGreedy, Examples) {
    const Graph star = Graph({"v", "a", "b", "c", "d"}, {{"v", "a"}, {"v", "b"}, {"v", "c"}, {"v", "d"}});
    const auto three = extend_greedy(star, {{"a", 1}, {"b", 2}, {"c", 4}, {"d", 4}}, {"v"});
    ASSERT_TRUE(three.has_value());
    EXPECT_EQ(three->at("v"), 3);
    EXPECT_FALSE(extend_greedy(star, {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}, {"v"}).has_value());
    EXPECT_THROW(extend_greedy(star, {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}, {"a", "v"}), input_error);
    EXPECT_THROW(extend_greedy(star, {{"a", 1}}, {"v"}), input_error);
}

TEST(AssignThenExtend, Examples) {
    const Graph p = Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    const auto out = assign_then_extend(p, {{"a", 1}}, {{"c", 1}}, {"b"});
    ASSERT_TRUE(out.has_value());
    EXPECT_EQ(out->at("b"), 2);
    EXPECT_THROW(assign_then_extend(p, {{"a", 1}}, {{"b", 1}}, {"c"}), input_error);
    const Coloring full{{"a", 1}, {"b", 2}, {"c", 1}};
    EXPECT_EQ(assign_then_extend(p, full, {}, {}), std::optional<Coloring>(full));
}

TEST(Recipes, EveryScheduleSucceeds) {
    ASSERT_EQ(recipe_library().size(), 22U);
    for (const auto& r : recipe_library()) {
        const RecipeCheck c = verify_recipe(r);
        EXPECT_TRUE(c.failures.empty()) << r.name;
        EXPECT_LE(c.cases, 4096U) << r.name;
        const auto [cases, failures] = recount(r);
        EXPECT_EQ(cases, c.cases) << r.name;
        EXPECT_EQ(failures, 0U) << r.name;
    }
}

TEST(Recipes, KnownCaseCounts) {
    EXPECT_EQ(verify_recipe(recipe_named("two-vertex")).cases, 192U);
    EXPECT_EQ(verify_recipe(recipe_named("square")).cases, 256U);
    EXPECT_EQ(verify_recipe(recipe_named("rim-no-edges")).cases, 243U);
}

TEST(Recipes, BrokenScheduleIsCaught) {
    Recipe r = recipe_named("two-vertex");
    r.steps = {recipe::force("u", recipe::constant(1)), recipe::greedy("v")};
    const RecipeCheck c = verify_recipe(r);
    EXPECT_FALSE(c.failures.empty());
    EXPECT_GT(recount(r).second, 0U);

    Recipe greedy_only = recipe_named("two-vertex");
    greedy_only.steps = recipe::greedy_all({"u", "v"});
    EXPECT_FALSE(verify_recipe(greedy_only).failures.empty());
}

TEST(Recipes, MalformedSchedules) {
    Recipe r = recipe_named("two-vertex");
    r.steps = {recipe::greedy("nowhere")};
    EXPECT_THROW(verify_recipe(r), input_error);
    r.steps = {recipe::greedy("u"), recipe::greedy("u")};
    EXPECT_THROW(verify_recipe(r), input_error);
    EXPECT_THROW(recipe_named("missing"), input_error);
}

TEST(Identify, ReducedGraphColorabilityMatchesOracle) {
    const auto& cfg = gadget("path-identify").config.graph();
    const Graph g = identify(remove_vertices(cfg, {"v"}), "u", "w", "vstar");
    EXPECT_EQ(four_color(g).has_value(), oracle::four_colorable(g));
    EXPECT_TRUE(four_color(g).has_value());
}
