// Command-line front end. Exit codes: 0 ok, 1 counterexample, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wheels/wheels.hpp"

using namespace wheels;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::GraphDocument load(const std::string& path) { return io::parse_graph_text(slurp(path)); }

std::vector<Vertex> split_list(const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

json subdivision_json(const std::optional<Subdivision>& s) {
    json j;
    j["found"] = s.has_value();
    if (s) {
        j["branch"] = s->branch;
        j["paths"] = s->paths;
    }
    return j;
}

json wheel_json(const std::optional<Wheel>& w) {
    json j;
    j["found"] = w.has_value();
    if (w) {
        j["center"] = w->center;
        j["rim"] = w->rim;
        j["spokes"] = std::vector<Vertex>(w->spokes.begin(), w->spokes.end());
    }
    return j;
}

json subgraph_json(const Subgraph& s) {
    json j;
    j["vertices"] = std::vector<Vertex>(s.vertices.begin(), s.vertices.end());
    json es = json::array();
    for (const auto& e : s.edges) es.push_back({e.u, e.v});
    j["edges"] = es;
    return j;
}

struct Output {
    std::string path;
    void write(const json& j) const {
        if (path.empty()) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw input_error("cannot write '" + path + "'");
            out << j.dump(2) << '\n';
        }
    }
};

ExperimentConfig read_config(const std::string& path, const std::vector<std::string>& sets, std::optional<std::uint64_t> seed) {
    ExperimentConfig cfg;
    auto apply = [&](std::string line) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        if (trim(line).empty()) return;
        if (eq == std::string::npos) throw input_error("config line without '=': " + line);
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(io::detail::parse_index(value));
        } else {
            cfg.values[key] = value;
        }
    };
    if (!path.empty()) {
        std::istringstream in(slurp(path));
        std::string line;
        while (std::getline(in, line)) apply(line);
    }
    for (const auto& s : sets) apply(s);
    if (seed) cfg.seed = *seed;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wheels: planar-side tools for K5-subdivision-free graphs"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--out", out.path, "write JSON here instead of stdout");
    int status = 0;

    std::string file;
    auto* planar = app.add_subcommand("planar", "planarity and faces of a graph");
    planar->add_option("file", file)->required();
    planar->callback([&] {
        const Graph g = load(file).graph;
        json j;
        j["planar"] = is_planar(g);
        if (is_planar(g)) {
            const Embedding e = embed(g);
            json faces = json::array();
            for (std::size_t f = 0; f < e.face_count(); ++f) faces.push_back(e.face_vertices(f));
            j["faces"] = faces;
        }
        out.write(j);
    });

    bool unordered = false;
    auto* disc = app.add_subcommand("disc-planar", "embeddable in a disc with the terminals on the boundary");
    disc->add_option("file", file)->required();
    disc->add_flag("--unordered", unordered, "ignore the listed terminal order");
    disc->add_flag("--ordered", [&](std::int64_t) { unordered = false; }, "respect the listed order (default)");
    disc->callback([&] {
        const TerminalGraph tg = load(file).terminal_graph(!unordered);
        json j;
        j["disc_planar"] = is_disc_planar(tg);
        j["ordered"] = !unordered;
        j["terminals"] = tg.terminals();
        out.write(j);
    });

    auto* faces = app.add_subcommand("faces", "facial walks of an embedding");
    faces->add_option("file", file)->required();
    faces->callback([&] {
        const Embedding e = embed(load(file).graph);
        json fs = json::array();
        for (std::size_t f = 0; f < e.face_count(); ++f) fs.push_back(e.face_vertices(f));
        out.write(json{{"faces", fs}, {"euler", satisfies_euler(e)}});
    });

    std::size_t limit = 12;
    auto* gw = app.add_subcommand("good-wheel", "search for an S-good wheel");
    gw->add_option("file", file)->required();
    gw->add_option("--max-vertices", limit, "search bound");
    gw->callback([&] { out.write(wheel_json(find_s_good_wheel(load(file).terminal_graph(false), SearchLimits{limit}))); });

    auto* k5 = app.add_subcommand("k5", "search for a K5-subdivision");
    k5->add_option("file", file)->required();
    k5->add_option("--max-vertices", limit, "search bound");
    k5->callback([&] { out.write(subdivision_json(find_k5_subdivision(load(file).graph, SearchLimits{limit}))); });

    auto* color = app.add_subcommand("color", "exact 4-coloring");
    color->add_option("file", file)->required();
    color->callback([&] {
        const auto c = four_color(load(file).graph);
        json j;
        j["colorable"] = c.has_value();
        if (c) j["assignment"] = *c;
        out.write(j);
    });

    std::size_t k = 4;
    bool planar_side = false;
    std::size_t max_emit = 1000;
    auto* seps = app.add_subcommand("separations", "enumerate k-separations");
    seps->add_option("file", file)->required();
    seps->add_option("-k", k, "order")->check(CLI::Range(0, 64));
    seps->add_flag("--planar-side", planar_side, "keep those whose side1 is disc-planar with the cut on the boundary");
    seps->add_option("--limit", max_emit, "stop after this many");
    seps->callback([&] {
        const Graph g = load(file).graph;
        json list = json::array();
        enumerate_separations(g, k, [&](const Separation& s) {
            if (planar_side) {
                const VertexSet cut = s.cut();
                if (!is_disc_planar(TerminalGraph(s.side1.to_graph(), std::vector<Vertex>(cut.begin(), cut.end()), false))) return true;
            }
            const VertexSet cut = s.cut();
            list.push_back({{"cut", std::vector<Vertex>(cut.begin(), cut.end())},
                            {"side1", subgraph_json(s.side1)},
                            {"side2", subgraph_json(s.side2)}});
            return list.size() < max_emit;
        });
        out.write(json{{"k", k}, {"count", list.size()}, {"separations", list}});
    });

    std::string cut_arg;
    auto* tri = app.add_subcommand("trichotomy", "check the planar-side trichotomy for every separation at a cut");
    tri->add_option("file", file)->required();
    tri->add_option("--cut", cut_arg, "comma-separated cut vertices")->required();
    tri->add_option("--max-vertices", limit, "wheel search bound");
    tri->callback([&] {
        const Graph g = load(file).graph;
        const auto cut_list = split_list(cut_arg);
        const VertexSet cut(cut_list.begin(), cut_list.end());
        for (const auto& v : cut) g.index(v);
        json list = json::array();
        bool none = false;
        enumerate_separations(g, cut.size(), [&](const Separation& s) {
            if (s.cut() != cut) return true;
            json j{{"side1", std::vector<Vertex>(s.side1.vertices.begin(), s.side1.vertices.end())}};
            try {
                const auto r = check_trichotomy(g, s, SearchLimits{limit});
                j["verdict"] = to_string(r.verdict);
                if (r.wheel) j["wheel"] = wheel_json(r.wheel);
                if (r.catalog_name) j["catalog"] = *r.catalog_name;
                none = none || r.verdict == Verdict::none;
            } catch (const precondition_error& e) {
                j["skipped"] = e.what();
            }
            list.push_back(j);
            return true;
        });
        out.write(json{{"cut", cut_list}, {"separations", list}});
        if (none) status = 1;
    });

    auto* cat = app.add_subcommand("catalog", "the six boundary-5 obstructions");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "names and sizes")->callback([&] {
        json list = json::array();
        for (const auto& m : catalog()) {
            list.push_back({{"name", m.name},
                            {"vertices", m.tg.graph().vertex_count()},
                            {"edges", m.tg.graph().edge_count()},
                            {"terminals", m.tg.terminals()}});
        }
        out.write(list);
    });
    std::string format = "edges";
    auto* dump = cat->add_subcommand("dump", "print every member");
    dump->add_option("--format", format, "graph6, dot or edges")->check(CLI::IsMember({"graph6", "dot", "edges"}));
    dump->callback([&] {
        for (const auto& m : catalog()) {
            if (format == "graph6") {
                std::cout << io::to_graph6(m.tg.graph()) << '\n';
            } else if (format == "dot") {
                std::cout << io::to_dot(m.tg, m.name);
            } else {
                std::cout << "# " << m.name << '\n' << io::to_edge_list(m.tg);
            }
        }
    });
    auto* match = cat->add_subcommand("match", "rooted-isomorphism against the catalog");
    match->add_option("file", file)->required();
    match->callback([&] {
        const auto m = match_catalog(load(file).terminal_graph(false));
        json j{{"match", m ? json(m->member->name) : json(nullptr)}};
        if (m) j["mapping"] = m->to_member;
        out.write(j);
    });

    std::string rule_name;
    bool list_rules = false;
    auto* lift = app.add_subcommand("lift", "reduce with a gadget rule, find a K5-subdivision, lift it back");
    lift->add_option("file", file, "host graph containing the rule's configuration");
    lift->add_option("--rule", rule_name, "gadget rule");
    lift->add_flag("--list", list_rules, "list the rules");
    lift->callback([&] {
        if (list_rules) {
            json list = json::array();
            for (const auto& gd : gadget_library()) list.push_back({{"name", gd.rule.name}, {"summary", gd.rule.summary}});
            out.write(list);
            return;
        }
        if (rule_name.empty() || file.empty()) throw CLI::ValidationError("lift needs --rule and a file");
        const Gadget& gd = gadget(rule_name);
        const Graph g = load(file).graph;
        const Graph reduced = apply_gadget(g, gd.rule);
        const auto t = find_k5_subdivision(reduced, SearchLimits{kDenseCapacity});
        json j{{"rule", rule_name}, {"reduced", subdivision_json(t)}};
        if (t) {
            const LiftResult r = lift_subdivision_traced(g, gd.rule, *t);
            j["lifted"] = subdivision_json(r.subdivision);
            j["option"] = r.option;
        }
        out.write(j);
    });

    std::size_t n_max = 6, s = 5;
    bool independent = false, interior2 = false, all_graphs = false, count_only = false;
    auto* gen = app.add_subcommand("gen", "orderly generation of terminal graphs");
    gen->add_option("-n,--n-max", n_max, "largest order")->check(CLI::Range(1, 9));
    gen->add_option("-s,--terminals", s, "number of terminals");
    gen->add_flag("--independent", independent, "terminals pairwise nonadjacent");
    gen->add_flag("--interior2", interior2, "every terminal has two interior neighbors");
    gen->add_flag("--all", all_graphs, "skip the disc-planarity pruning");
    gen->add_flag("--count", count_only, "print only the number of graphs");
    gen->add_option("--format", format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
    gen->callback([&] {
        GenerationFilters f;
        f.disc_planar = !all_graphs;
        f.s_independent = independent;
        f.interior_neighbors_2 = interior2;
        std::size_t n = 0;
        generate_terminal_graphs(n_max, s, f, [&](const TerminalGraph& tg) {
            ++n;
            if (count_only) return true;
            if (format == "graph6") {
                std::cout << io::to_graph6(tg.graph()) << "\nS:";
                for (const auto& t : tg.terminals()) std::cout << ' ' << tg.graph().index(t);
                std::cout << '\n';
            } else {
                std::cout << io::to_edge_list(tg) << '\n';
            }
            return true;
        });
        if (count_only) std::cout << n << '\n';
    });

    std::string experiment, config_path;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    bool with_time = false;
    auto* verify = app.add_subcommand("verify", "run a registered experiment");
    verify->add_option("experiment", experiment)->required();
    verify->add_option("--config", config_path, "key = value file");
    verify->add_option("--set", sets, "key=value override");
    verify->add_option("--seed", seed, "seed override");
    verify->add_flag("--time", with_time, "include wall time in the report");
    verify->callback([&] {
        const auto r = run_experiment(experiment, read_config(config_path, sets, seed));
        out.write(r.to_json(with_time));
        if (!r.passed()) status = 1;
    });
    app.add_subcommand("experiments", "list registered experiments")->callback([&] {
        json list = json::array();
        for (const auto& [name, fn] : experiment_registry()) list.push_back(name);
        out.write(list);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
