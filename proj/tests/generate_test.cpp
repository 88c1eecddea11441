#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wheels/catalog.hpp"
#include "wheels/experiments.hpp"
#include "wheels/generate.hpp"
#include "wheels/io.hpp"

using namespace wheels;
using namespace wheels::make;

namespace {

std::vector<std::size_t> per_order(std::size_t n_max, std::size_t s, const GenerationFilters& f) {
    std::vector<std::size_t> out(n_max + 1, 0);
    generate_terminal_graphs(n_max, s, f, [&](const TerminalGraph& tg) {
        ++out[tg.graph().vertex_count()];
        return true;
    });
    return out;
}

// Smallest adjacency bitstring over relabelings that keep terminals (the
// first s vertices) among themselves.
std::vector<bool> canonical_form(std::size_t n, std::size_t s, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> best;
    const auto mid = p.begin() + static_cast<std::ptrdiff_t>(s);
    do {
        do {
            std::vector<bool> code;
            for (std::size_t j = 1; j < n; ++j) {
                for (std::size_t i = 0; i < j; ++i) code.push_back(adj[p[i]][p[j]]);
            }
            if (best.empty() || code < best) best = code;
        } while (std::next_permutation(mid, p.end()));
    } while (std::next_permutation(p.begin(), mid));
    return best;
}

// Unordered disc-planar: planar after adding a vertex on every terminal.
bool apex_planar(std::size_t n, std::size_t s, std::vector<std::pair<int, int>> edges) {
    for (std::size_t t = 0; t < s; ++t) edges.emplace_back(static_cast<int>(t), static_cast<int>(n));
    return oracle::planar(Graph::with_indices(n + 1, edges));
}

// Rooted isomorphism classes on exactly n vertices, from all labeled graphs.
std::size_t brute_classes(std::size_t n, std::size_t s, bool independent, bool disc) {
    std::vector<std::pair<int, int>> slots;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (independent && j < s) continue;
            slots.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    std::set<std::vector<bool>> classes;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t q = 0; q < slots.size(); ++q) {
            if ((mask >> q) & 1U) es.push_back(slots[q]);
        }
        if (disc && !apex_planar(n, s, es)) continue;
        classes.insert(canonical_form(n, s, es));
    }
    return classes.size();
}

}  // namespace

TEST(Generate, UnlabeledGraphCounts) {
    GenerationFilters f;
    f.disc_planar = false;
    const auto counts = per_order(7, 0, f);
    EXPECT_EQ(counts, (std::vector<std::size_t>{0, 1, 2, 4, 11, 34, 156, 1044}));
}

TEST(Generate, PlanarGraphCounts) {
    const auto counts = per_order(7, 0, GenerationFilters{});
    EXPECT_EQ(counts, (std::vector<std::size_t>{0, 1, 2, 4, 11, 33, 142, 822}));
}

TEST(Generate, IndependentFiveTerminalsAgainstBruteForce) {
    GenerationFilters f;
    f.s_independent = true;
    const auto counts = per_order(8, 5, f);
    EXPECT_EQ(counts[5], 1U);
    EXPECT_EQ(counts[6], 6U);
    for (std::size_t n = 5; n <= 7; ++n) EXPECT_EQ(counts[n], brute_classes(n, 5, true, true)) << n;
    // brute_classes(8, 5, true, true) also gives 688, in about 30 s
    EXPECT_EQ(counts[8], 688U);
}

TEST(Generate, SmallTerminalCountsAgainstBruteForce) {
    for (std::size_t s = 0; s <= 3; ++s) {
        for (bool disc : {false, true}) {
            GenerationFilters f;
            f.disc_planar = disc;
            const auto counts = per_order(5, s, f);
            for (std::size_t n = std::max<std::size_t>(s, 1); n <= 5; ++n) {
                EXPECT_EQ(counts[n], brute_classes(n, s, false, disc)) << "s=" << s << " n=" << n;
            }
        }
    }
}

TEST(Generate, StreamIsIsomorphFree) {
    for (std::size_t s : {2U, 4U, 5U}) {
        std::vector<TerminalGraph> seen;
        GenerationFilters f;
        f.disc_planar = s != 2;
        generate_terminal_graphs(6, s, f, [&](const TerminalGraph& tg) {
            seen.push_back(tg);
            return true;
        });
        for (std::size_t i = 0; i < seen.size(); ++i) {
            for (std::size_t j = i + 1; j < seen.size(); ++j) {
                ASSERT_FALSE(rooted_isomorphic(seen[i], seen[j])) << io::to_edge_list(seen[i]) << io::to_edge_list(seen[j]);
            }
        }
    }
}

TEST(Generate, EmitsSmallCatalogMembers) {
    GenerationFilters f;
    f.s_independent = true;
    std::set<std::string> found;
    generate_terminal_graphs(7, 5, f, [&](const TerminalGraph& tg) {
        if (auto m = matches_catalog(tg)) found.insert(m->name);
        return true;
    });
    EXPECT_EQ(found, (std::set<std::string>{"W1", "W2", "X1", "X2"}));
}

TEST(Generate, FiltersAndStopping) {
    GenerationFilters none;
    none.accept = [](const TerminalGraph&) { return false; };
    std::size_t n = 0;
    generate_terminal_graphs(6, 4, none, [&](const TerminalGraph&) { return ++n, true; });
    EXPECT_EQ(n, 0U);

    GenerationFilters two;
    two.s_independent = true;
    two.interior_neighbors_2 = true;
    generate_terminal_graphs(7, 5, two, [&](const TerminalGraph& tg) {
        for (const auto& t : tg.terminals()) {
            std::size_t inner = 0;
            for (const auto& w : tg.graph().neighbors(t)) inner += tg.is_terminal(w) ? 0 : 1;
            EXPECT_GE(inner, 2U);
        }
        return true;
    });

    std::size_t seen = 0;
    generate_terminal_graphs(6, 3, GenerationFilters{}, [&](const TerminalGraph&) { return ++seen < 5; });
    EXPECT_EQ(seen, 5U);

    EXPECT_THROW(generate_terminal_graphs(10, 5, GenerationFilters{}, [](const TerminalGraph&) { return true; }),
                 resource_limit_error);
    EXPECT_THROW(generate_terminal_planar(6, 3, GenerationFilters{}, [](const TerminalGraph&) { return true; }), input_error);
}

TEST(Experiments, Registry) {
    EXPECT_THROW(run_experiment("nothing"), input_error);
    const auto r = run_experiment("catalog-no-good-wheel");
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.instances, 6U);
    EXPECT_EQ(experiment_registry().size(), 6U);
}

TEST(Experiments, DeterministicAcrossWorkerCounts) {
    ExperimentConfig a;
    a.seed = 5;
    a.values = {{"instances", "40"}, {"workers", "1"}};
    ExperimentConfig b = a;
    b.values["workers"] = "4";
    const auto ra = run_experiment("planar-no-k5", a);
    const auto rb = run_experiment("planar-no-k5", b);
    EXPECT_EQ(ra.instances, 40U);
    EXPECT_EQ(ra.counterexamples, rb.counterexamples);
    EXPECT_EQ(ra.counters, rb.counters);

    ExperimentConfig w;
    w.seed = 2;
    w.values = {{"instances", "20"}, {"workers", "1"}};
    ExperimentConfig w4 = w;
    w4.values["workers"] = "3";
    const auto wa = run_experiment("wheel-to-k5", w);
    const auto wb = run_experiment("wheel-to-k5", w4);
    EXPECT_TRUE(wa.passed());
    EXPECT_EQ(wa.counters, wb.counters);
    EXPECT_EQ(wa.to_json().dump(), run_experiment("wheel-to-k5", w).to_json().dump());
}

TEST(Experiments, BadConfig) {
    ExperimentConfig c;
    c.values = {{"max_vertices", "4"}};
    EXPECT_THROW(run_experiment("planar-no-k5", c), input_error);
    c.values = {{"instances", "abc"}};
    EXPECT_THROW(run_experiment("planar-no-k5", c), input_error);
}
