#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wheels/catalog.hpp"
#include "wheels/generate.hpp"
#include "wheels/io.hpp"
#include "wheels/planarity.hpp"
#include "wheels/wheel.hpp"

using namespace wheels;
using namespace wheels::make;

namespace {

// Permutation search for a terminal-preserving isomorphism.
bool brute_rooted_iso(const TerminalGraph& a, const TerminalGraph& b) {
    const Graph& ga = a.graph();
    const Graph& gb = b.graph();
    const std::size_t n = ga.vertex_count();
    if (n != gb.vertex_count() || ga.edge_count() != gb.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            ok = a.is_terminal(ga.id(static_cast<int>(v))) == b.is_terminal(gb.id(perm[v]));
        }
        for (const auto& [u, v] : ga.index_edges()) {
            if (!ok) break;
            ok = gb.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

TerminalGraph relabeled(const TerminalGraph& tg, Rng& rng) {
    const Graph& g = tg.graph();
    std::vector<Vertex> fresh;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) fresh.push_back("r" + std::to_string(i));
    rng.shuffle(fresh);
    std::map<Vertex, Vertex> to;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) to[g.id(static_cast<int>(i))] = fresh[i];
    std::vector<Edge> es;
    for (const auto& e : g.edges()) es.emplace_back(to[e.u], to[e.v]);
    std::vector<Vertex> ts;
    for (const auto& t : tg.terminals()) ts.push_back(to[t]);
    return TerminalGraph(Graph(fresh, es), ts, tg.ordered());
}

}  // namespace

TEST(Catalog, Sizes) {
    const std::vector<std::pair<std::string, std::size_t>> expected{{"W1", 6}, {"W2", 6}, {"X1", 7},
                                                                    {"X2", 7}, {"Y", 8},  {"Z", 9}};
    ASSERT_EQ(catalog().size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(catalog()[i].name, expected[i].first);
        EXPECT_EQ(catalog()[i].tg.graph().vertex_count(), expected[i].second);
        EXPECT_EQ(catalog()[i].tg.terminals().size(), 5U);
    }
    EXPECT_THROW(catalog_member("Q"), input_error);
}

TEST(Catalog, TerminalsIndependentAndOnTheDisc) {
    for (const auto& m : catalog()) {
        const auto& g = m.tg.graph();
        for (const auto& a : m.tg.terminals()) {
            for (const auto& b : m.tg.terminals()) EXPECT_FALSE(g.adjacent(a, b)) << m.name;
        }
        EXPECT_TRUE(is_disc_planar(m.tg)) << m.name;
        EXPECT_TRUE(oracle::ordered_disc_planar(g, m.tg.terminals())) << m.name;
    }
}

TEST(Catalog, NoGoodWheel) {
    for (const auto& m : catalog()) {
        EXPECT_FALSE(find_s_good_wheel(m.tg).has_value()) << m.name;
        EXPECT_FALSE(oracle::has_s_good_wheel(m.tg.graph(), m.tg.terminals())) << m.name;
    }
}

TEST(Catalog, PairwiseDistinct) {
    const auto& c = catalog();
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            EXPECT_EQ(rooted_isomorphic(c[i].tg, c[j].tg), i == j) << c[i].name << " " << c[j].name;
            EXPECT_EQ(brute_rooted_iso(c[i].tg, c[j].tg), i == j) << c[i].name << " " << c[j].name;
        }
    }
}

TEST(Catalog, RotatedTerminalsStillMatch) {
    const auto& x1 = catalog_member("X1");
    const TerminalGraph rotated(x1.tg.graph(), {"t3", "t4", "t5", "t1", "t2"}, true);
    const auto iso = rooted_isomorphism(rotated, x1.tg);
    ASSERT_TRUE(iso.has_value());
    for (const auto& t : rotated.terminals()) EXPECT_TRUE(x1.tg.is_terminal(iso->at(t)));
    for (const auto& e : x1.tg.graph().edges()) EXPECT_TRUE(x1.tg.graph().adjacent(iso->at(e.u), iso->at(e.v)));
}

TEST(Catalog, MatchesUnderRelabeling) {
    Rng rng(8);
    for (const auto& m : catalog()) {
        for (int i = 0; i < 5; ++i) {
            const TerminalGraph r = relabeled(m.tg, rng);
            const auto found = matches_catalog(r);
            ASSERT_TRUE(found.has_value()) << m.name;
            EXPECT_EQ(found->name, m.name);
        }
    }
}

TEST(Catalog, NearMisses) {
    const auto& w2 = catalog_member("W2");
    const Graph less = remove(w2.tg.graph(), VertexEdgeSet{{}, {Edge("u", "t5")}});
    const auto w1 = matches_catalog(TerminalGraph(less, w2.tg.terminals(), true));
    ASSERT_TRUE(w1.has_value());
    EXPECT_EQ(w1->name, "W1");

    const Graph c5 = cycle(5, "t");
    EXPECT_FALSE(matches_catalog(TerminalGraph(c5, c5.vertices(), true)).has_value());

    // an interior vertex marked as terminal breaks the match
    const auto& x2 = catalog_member("X2");
    EXPECT_FALSE(matches_catalog(TerminalGraph(x2.tg.graph(), {"t1", "t2", "t3", "t4", "u"}, true)).has_value());
}

TEST(Catalog, SpecialVertexOfY) {
    const auto& y = catalog_member("Y");
    ASSERT_TRUE(y.special_vertex.has_value());
    std::size_t with_three = 0;
    for (const auto& t : y.tg.terminals()) {
        std::size_t interior = 0;
        for (const auto& w : y.tg.graph().neighbors(t)) interior += y.tg.is_terminal(w) ? 0 : 1;
        if (interior == 3) {
            ++with_three;
            EXPECT_EQ(t, *y.special_vertex);
        }
    }
    EXPECT_EQ(with_three, 1U);
    for (const auto& m : catalog()) {
        if (m.name != "Y") EXPECT_FALSE(m.special_vertex.has_value()) << m.name;
    }
}

TEST(Catalog, ZDrawing) {
    const auto& z = catalog_member("Z");
    EXPECT_EQ(z.tg.graph().degree("z"), 6U);
    EXPECT_TRUE(is_cycle_in(z.tg.graph(), std::vector<Vertex>{"z", "u", "v", "w"}) ||
                is_cycle_in(z.tg.graph(), std::vector<Vertex>{"u", "v", "w", "z"}));
}

TEST(RootedIso, BehavesAsEquivalence) {
    Rng rng(12);
    GenerationFilters f;
    f.s_independent = true;
    std::vector<TerminalGraph> corpus;
    generate_terminal_graphs(7, 5, f, [&](const TerminalGraph& tg) {
        if (rng.chance(0.4)) corpus.push_back(tg);
        return true;
    });
    ASSERT_GT(corpus.size(), 15U);
    for (const auto& m : catalog()) corpus.push_back(m.tg);
    for (const auto& a : corpus) {
        const TerminalGraph b = relabeled(a, rng);
        const TerminalGraph c = relabeled(b, rng);
        EXPECT_TRUE(rooted_isomorphic(a, a));
        EXPECT_TRUE(rooted_isomorphic(a, b));
        EXPECT_TRUE(rooted_isomorphic(b, a));
        EXPECT_TRUE(rooted_isomorphic(b, c));
        EXPECT_TRUE(rooted_isomorphic(a, c));
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            EXPECT_EQ(rooted_isomorphic(corpus[i], corpus[j]), rooted_isomorphic(corpus[j], corpus[i]));
            if (corpus[i].graph().vertex_count() <= 7 && corpus[j].graph().vertex_count() <= 7) {
                EXPECT_EQ(rooted_isomorphic(corpus[i], corpus[j]), brute_rooted_iso(corpus[i], corpus[j]));
            }
        }
    }
}
