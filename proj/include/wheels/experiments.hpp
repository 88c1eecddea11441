#pragma once

// Batch checks of the finite claims, each a deterministic function of its
// config. Counterexamples are serialized as edge lists.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "wheels/catalog.hpp"
#include "wheels/coloring.hpp"
#include "wheels/gadget_library.hpp"
#include "wheels/generate.hpp"
#include "wheels/io.hpp"
#include "wheels/linkage.hpp"
#include "wheels/planarity.hpp"
#include "wheels/recipes.hpp"
#include "wheels/separation.hpp"
#include "wheels/subdivision.hpp"
#include "wheels/wheel.hpp"

namespace wheels {

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::map<std::string, std::string> values;

    long get(const std::string& key, long fallback) const {
        auto it = values.find(key);
        if (it == values.end()) return fallback;
        return io::detail::parse_index(it->second);
    }
};

struct ExperimentReport {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::vector<std::string> counterexamples;
    std::map<std::string, long> counters;
    std::map<std::string, std::string> config;
    double wall_seconds = 0;

    bool passed() const { return counterexamples.empty(); }

    nlohmann::json to_json(bool with_time = false) const {
        nlohmann::json j;
        j["experiment"] = name;
        j["seed"] = seed;
        j["instances"] = instances;
        j["pass"] = passed();
        j["counterexamples"] = counterexamples;
        j["counters"] = counters;
        j["config"] = config;
        if (with_time) j["wall_seconds"] = wall_seconds;
        return j;
    }
};

namespace experiments {

/// What one instance contributes to a report.
struct InstanceResult {
    std::vector<std::string> counterexamples;
    std::map<std::string, long> counters;
};

/// splitmix64 finalizer; gives each instance its own stream.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + stream * 0xbf58476d1ce4e5b9ULL + index + 1;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Runs fn(index, rng, result) for index in [0, count) on a worker pool
/// (config key "workers", default hardware concurrency) and merges the
/// results in index order, so the report does not depend on scheduling.
template <class F>
void fan_out(const ExperimentConfig& cfg, ExperimentReport& r, std::uint64_t stream, long count, F&& fn) {
    if (count <= 0) return;
    std::vector<InstanceResult> results(static_cast<std::size_t>(count));
    const long hw = static_cast<long>(std::max(1U, std::thread::hardware_concurrency()));
    const long workers = std::clamp(cfg.get("workers", hw), 1L, count);
    std::atomic<long> next{0};
    auto work = [&](long w) {
        for (long i = next++; i < count; i = next++) {
            Rng rng(instance_seed(cfg.seed, stream, static_cast<std::uint64_t>(i)));
            try {
                fn(i, rng, results[static_cast<std::size_t>(i)]);
            } catch (const std::exception& e) {
                results[static_cast<std::size_t>(i)].counterexamples.push_back(std::string("instance ") + std::to_string(i) + ": " + e.what());
            }
        }
        (void)w;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (long w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& res : results) {
        ++r.instances;
        for (auto& c : res.counterexamples) r.counterexamples.push_back(std::move(c));
        for (const auto& [k, v] : res.counters) r.counters[k] += v;
    }
}

inline std::string describe(const Graph& g, const std::string& note) { return note + "\n" + io::to_edge_list(g); }

inline void catalog_no_good_wheel(const ExperimentConfig&, ExperimentReport& r) {
    for (const auto& m : catalog()) {
        ++r.instances;
        const Graph& g = m.tg.graph();
        bool independent = true;
        for (const auto& e : g.edges()) independent = independent && !(m.tg.is_terminal(e.u) && m.tg.is_terminal(e.v));
        const bool disc = is_disc_planar(m.tg);
        const bool wheel = find_s_good_wheel(m.tg).has_value();
        if (!disc || !independent || wheel) {
            r.counterexamples.push_back(describe(g, m.name + (disc ? "" : " not disc-planar") +
                                                        (independent ? "" : " S not independent") +
                                                        (wheel ? " has an S-good wheel" : "")));
        }
    }
}

/// A wheel with at least four spokes, two planted crossing paths through new
/// vertices, and noise vertices.
inline void wheel_to_k5(const ExperimentConfig& cfg, ExperimentReport& r) {
    fan_out(cfg, r, 1, cfg.get("instances", 100), [](long, Rng& rng, InstanceResult& out) {
        const std::size_t k = 4 + rng.below(5);
        std::vector<Vertex> rim;
        for (std::size_t i = 1; i <= k; ++i) rim.push_back("c" + std::to_string(i));
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle(idx);
        const std::size_t spoke_count = 4 + rng.below(k - 3);
        std::vector<std::size_t> spoke_idx(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(spoke_count));
        std::sort(spoke_idx.begin(), spoke_idx.end());
        rng.shuffle(spoke_idx);
        std::vector<std::size_t> four(spoke_idx.begin(), spoke_idx.begin() + 4);
        std::sort(four.begin(), four.end());
        std::array<Vertex, 4> ws{rim[four[0]], rim[four[1]], rim[four[2]], rim[four[3]]};

        EdgeSet es;
        std::vector<Vertex> ids = rim;
        ids.push_back("w");
        for (std::size_t i = 0; i < k; ++i) es.emplace(rim[i], rim[(i + 1) % k]);
        Wheel wh;
        wh.center = "w";
        wh.rim = rim;
        for (std::size_t s : spoke_idx) {
            es.emplace("w", rim[s]);
            wh.spokes.insert(rim[s]);
        }
        auto plant = [&](const Vertex& a, const Vertex& b, const std::string& prefix) {
            const std::size_t len = 1 + rng.below(3);
            Vertex prev = a;
            for (std::size_t i = 1; i <= len; ++i) {
                Vertex x = prefix + std::to_string(i);
                ids.push_back(x);
                es.emplace(prev, x);
                prev = x;
            }
            es.emplace(prev, b);
        };
        plant(ws[0], ws[2], "x");
        plant(ws[1], ws[3], "y");
        const std::size_t noise = rng.below(4);
        for (std::size_t i = 1; i <= noise; ++i) {
            Vertex z = "z" + std::to_string(i);
            const std::vector<Vertex> before = ids;
            ids.push_back(z);
            for (int e = 0; e < 3; ++e) es.emplace(z, before[rng.below(before.size())]);
        }
        const Graph g(ids, std::vector<Edge>(es.begin(), es.end()));
        VertexSet forbidden = wh.vertex_set();
        for (const auto& w : ws) forbidden.erase(w);
        LinkageOptions opts;
        opts.limits = SearchLimits{kDenseCapacity};
        auto ps = find_disjoint_paths(g, {{ws[0], ws[2]}, {ws[1], ws[3]}}, forbidden, opts);
        if (!ps) {
            out.counterexamples.push_back(describe(g, "no cross linkage found"));
            return;
        }
        try {
            const Subdivision s = wheel_plus_paths_to_k5(g, wh, ws, *ps);
            if (auto d = subdivision_defect(g, s); !d.empty()) out.counterexamples.push_back(describe(g, d));
        } catch (const std::exception& e) {
            out.counterexamples.push_back(describe(g, e.what()));
        }
    });
}

/// Host = configuration plus a random graph on its boundary and a few extra
/// vertices; never one of the rule's inserted pairs.
inline Graph gadget_host(const Gadget& gd, Rng& rng, double density) {
    const Graph& config = gd.config.graph();
    std::vector<Vertex> outer = gd.config.terminals();
    const std::size_t extra = 2 + rng.below(2);
    for (std::size_t i = 1; i <= extra; ++i) outer.push_back("h" + std::to_string(i));
    EdgeSet es;
    for (const auto& e : config.edges()) es.insert(e);
    for (std::size_t j = 1; j < outer.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Edge e(outer[i], outer[j]);
            if (gd.rule.insert_edges.count(e) || gd.outside_degree.count(e.u) || gd.outside_degree.count(e.v)) continue;
            if (rng.chance(density)) es.insert(e);
        }
    }
    for (const auto& [v, deg] : gd.outside_degree) {
        std::vector<Vertex> pool;
        for (const auto& w : outer) {
            if (w != v && !gd.rule.insert_edges.count(Edge(v, w)) && !config.adjacent(v, w)) pool.push_back(w);
        }
        rng.shuffle(pool);
        for (int i = 0; i < deg && i < static_cast<int>(pool.size()); ++i) es.emplace(v, pool[static_cast<std::size_t>(i)]);
    }
    std::vector<Vertex> ids = config.vertices();
    for (std::size_t i = 1; i <= extra; ++i) ids.push_back("h" + std::to_string(i));
    return Graph(ids, std::vector<Edge>(es.begin(), es.end()));
}

inline std::string witness_key(const Subdivision& s) {
    std::string k;
    for (const auto& p : s.paths) {
        for (const auto& v : p) k += v + ",";
        k += ";";
    }
    return k;
}

inline void lift_all_gadgets(const ExperimentConfig& cfg, ExperimentReport& r) {
    const long hosts = cfg.get("hosts_per_rule", 40);
    const long per_host = cfg.get("witnesses_per_host", 12);
    const SearchLimits big{kDenseCapacity};
    const auto& lib = gadget_library();
    for (const auto& gd : lib) {
        for (const char* c : {".hosts_with_k5", ".lifted", ".through_inserted", ".extracted"}) r.counters[gd.rule.name + c] = 0;
    }
    fan_out(cfg, r, 3, hosts * static_cast<long>(lib.size()), [&](long i, Rng& rng, InstanceResult& out) {
        const Gadget& gd = lib[static_cast<std::size_t>(i / hosts)];
        const long h = i % hosts;
        const double density = 0.5 + 0.4 * static_cast<double>(h) / static_cast<double>(std::max<long>(hosts - 1, 1));
        const Graph g = gadget_host(gd, rng, density);
        const Graph reduced = apply_gadget(g, gd.rule);
        std::map<std::string, Subdivision> witnesses;
        for (auto& s : find_k5_subdivisions(reduced, static_cast<std::size_t>(per_host), big)) {
            witnesses.emplace(witness_key(s), std::move(s));
        }
        if (witnesses.empty()) return;
        ++out.counters[gd.rule.name + ".hosts_with_k5"];
        // thinner copies of G' push witnesses through the inserted edges
        const auto edges = reduced.edges();
        for (int variant = 0; variant < 4; ++variant) {
            std::vector<Edge> keep;
            for (const auto& e : edges) {
                if (gd.rule.insert_edges.count(e) || !rng.chance(0.3)) keep.push_back(e);
            }
            const Graph thin(reduced.vertices(), keep);
            if (auto s = find_k5_subdivision(thin, big)) witnesses.emplace(witness_key(*s), std::move(*s));
        }
        for (const auto& [key, t] : witnesses) {
            bool uses = false;
            for (const auto& e : gd.rule.insert_edges) uses = uses || t.uses_edge(e);
            out.counters[gd.rule.name + ".through_inserted"] += uses ? 1 : 0;
            try {
                const LiftResult lr = lift_subdivision_traced(g, gd.rule, t);
                if (auto d = subdivision_defect(g, lr.subdivision); !d.empty()) {
                    out.counterexamples.push_back(describe(g, gd.rule.name + ": lifted witness invalid: " + d));
                } else {
                    ++out.counters[gd.rule.name + ".lifted"];
                    out.counters[gd.rule.name + ".extracted"] += lr.extracted ? 1 : 0;
                }
            } catch (const std::exception& e) {
                out.counterexamples.push_back(describe(g, gd.rule.name + ": " + e.what()));
            }
        }
    });
}

inline void coloring_recipes(const ExperimentConfig& cfg, ExperimentReport& r) {
    const auto& lib = recipe_library();
    fan_out(cfg, r, 4, static_cast<long>(lib.size()), [&](long i, Rng&, InstanceResult& out) {
        const Recipe& rec = lib[static_cast<std::size_t>(i)];
        const RecipeCheck c = verify_recipe(rec);
        out.counters["cases"] = static_cast<long>(c.cases);
        out.counters[rec.name + ".cases"] = static_cast<long>(c.cases);
        for (const auto& base : c.failures) {
            std::string s = rec.name + ": schedule fails from";
            for (const auto& [v, col] : base) s += " " + v + "=" + std::to_string(col);
            out.counterexamples.push_back(s);
        }
    });
}

inline void planar_no_k5(const ExperimentConfig& cfg, ExperimentReport& r) {
    const long n_max = cfg.get("max_vertices", 12);
    if (n_max < 5) throw input_error("max_vertices must be at least 5");
    fan_out(cfg, r, 5, cfg.get("instances", 200), [&](long, Rng& rng, InstanceResult& out) {
        const std::size_t n = 5 + rng.below(static_cast<std::size_t>(n_max) - 4);
        const double drop = static_cast<double>(rng.below(31)) / 100.0;
        const Graph g = random_planar(n, drop, rng);
        if (!is_planar(g)) {
            out.counterexamples.push_back(describe(g, "generated graph reported nonplanar"));
            return;
        }
        if (find_k5_subdivision(g, SearchLimits{static_cast<std::size_t>(n_max)})) {
            out.counterexamples.push_back(describe(g, "K5-subdivision in a planar graph"));
        }
        const Embedding e = embed(g);
        if (!satisfies_euler(e)) out.counterexamples.push_back(describe(g, "face count breaks Euler's formula"));
    });
}

inline void trichotomy_regression(const ExperimentConfig& cfg, ExperimentReport& r) {
    Rng rng(cfg.seed);
    const long hosts = cfg.get("hosts_per_member", 5);
    auto glue = [&](const TerminalGraph& side, const std::vector<Vertex>& extra_nbrs_of, int extra_deg) {
        std::vector<Vertex> outer = side.terminals();
        for (int i = 1; i <= 3; ++i) outer.push_back("h" + std::to_string(i));
        EdgeSet es2;
        for (std::size_t j = 1; j < outer.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (rng.chance(0.5)) es2.emplace(outer[i], outer[j]);
            }
        }
        for (const auto& v : extra_nbrs_of) {
            for (int i = 1; i <= extra_deg; ++i) es2.emplace(v, "h" + std::to_string(i));
        }
        Separation sep;
        const Graph& g1 = side.graph();
        sep.side1.vertices = VertexSet(g1.vertices().begin(), g1.vertices().end());
        for (const auto& e : g1.edges()) sep.side1.edges.insert(e);
        sep.side2.vertices = VertexSet(outer.begin(), outer.end());
        sep.side2.edges = es2;
        EdgeSet all = sep.side1.edges;
        all.insert(es2.begin(), es2.end());
        VertexSet vs = sep.side1.vertices;
        vs.insert(outer.begin(), outer.end());
        return std::pair{Graph(std::vector<Vertex>(vs.begin(), vs.end()), std::vector<Edge>(all.begin(), all.end())), sep};
    };
    auto check = [&](const Graph& g, const Separation& sep, Verdict want, const std::string& what) {
        ++r.instances;
        try {
            const TrichotomyResult t = check_trichotomy(g, sep, SearchLimits{16});
            ++r.counters[std::string("verdict.") + to_string(t.verdict)];
            if (t.verdict != want) {
                r.counterexamples.push_back(describe(g, what + ": verdict " + to_string(t.verdict) + ", expected " + to_string(want)));
            }
        } catch (const std::exception& e) {
            r.counterexamples.push_back(describe(g, what + ": " + e.what()));
        }
    };

    for (const auto& m : catalog()) {
        for (long h = 0; h < hosts; ++h) {
            std::vector<Vertex> boost;
            if (m.special_vertex) boost.push_back(*m.special_vertex);
            auto [g, sep] = glue(m.tg, boost, 2);
            check(g, sep, Verdict::catalog, "catalog member " + m.name);
        }
    }
    const std::vector<Vertex> t4{"t1", "t2", "t3", "t4"};
    for (int mask = 0; mask < 16; ++mask) {
        for (long h = 0; h < hosts; ++h) {
            std::vector<Edge> es;
            for (int i = 0; i < 4; ++i) {
                if ((mask >> i) & 1) es.emplace_back("u", t4[static_cast<std::size_t>(i)]);
            }
            std::vector<Vertex> ids = t4;
            ids.push_back("u");
            auto [g, sep] = glue(TerminalGraph(Graph(ids, es), t4, false), {}, 0);
            check(g, sep, Verdict::small, "5-vertex side of a 4-separation");
        }
    }
    const long wheels = cfg.get("wheel_sides", 40);
    for (long it = 0; it < wheels; ++it) {
        const std::size_t k = 3 + rng.below(5);
        const std::size_t s = 4 + rng.below(2);
        std::vector<Vertex> ids, ts;
        std::vector<Edge> es;
        for (std::size_t i = 1; i <= k; ++i) {
            ids.push_back("c" + std::to_string(i));
            es.emplace_back("c" + std::to_string(i), "c" + std::to_string(i % k + 1));
            es.emplace_back("w", "c" + std::to_string(i));
        }
        ids.push_back("w");
        // terminals around the rim, each on a nonempty run of consecutive rim vertices
        std::vector<std::size_t> cuts;
        for (std::size_t i = 0; i < s; ++i) cuts.push_back(rng.below(k));
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i < s; ++i) {
            const Vertex t = "t" + std::to_string(i + 1);
            ts.push_back(t);
            ids.push_back(t);
            const std::size_t from = cuts[i];
            const std::size_t to = i + 1 < s ? cuts[i + 1] : cuts[0] + k;
            for (std::size_t j = from; j <= to; ++j) {
                if (j == from || rng.chance(0.5) || j == to) es.emplace_back(t, "c" + std::to_string(j % k + 1));
            }
        }
        EdgeSet dedup(es.begin(), es.end());
        const TerminalGraph side(Graph(ids, std::vector<Edge>(dedup.begin(), dedup.end())), ts, false);
        auto [g, sep] = glue(side, {}, 0);
        check(g, sep, Verdict::good_wheel, "wheel-bearing side");
    }
    if (r.counters.count("verdict.NONE")) r.counterexamples.push_back("NONE verdicts present");
}

}  // namespace experiments

using ExperimentFn = std::function<void(const ExperimentConfig&, ExperimentReport&)>;

inline const std::map<std::string, ExperimentFn>& experiment_registry() {
    static const std::map<std::string, ExperimentFn> reg{
        {"catalog-no-good-wheel", experiments::catalog_no_good_wheel},
        {"wheel-to-k5", experiments::wheel_to_k5},
        {"lift-all-gadgets", experiments::lift_all_gadgets},
        {"coloring-recipes", experiments::coloring_recipes},
        {"planar-no-k5", experiments::planar_no_k5},
        {"trichotomy-regression", experiments::trichotomy_regression},
    };
    return reg;
}

inline ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& cfg = {}) {
    auto it = experiment_registry().find(name);
    if (it == experiment_registry().end()) throw input_error("unknown experiment '" + name + "'");
    ExperimentReport r;
    r.name = name;
    r.seed = cfg.seed;
    r.config = cfg.values;
    const auto t0 = std::chrono::steady_clock::now();
    it->second(cfg, r);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace wheels
