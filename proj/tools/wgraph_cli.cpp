// Command-line front-end: generate test graphs, run any algorithm on an
// edge-list file, sweep the verification suites, and benchmark scaling.
//
// Exit codes: 0 success, 1 verification/algorithm failure, 2 usage error,
// 3 input-format error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wgraph/wgraph.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

using SGraph = wgraph::Graph<std::string>;
using SEdge = wgraph::Edge<std::string>;

std::string show(double d) { return d == wgraph::INF ? "inf" : wgraph::format_weight(d); }

void parse_weight_range(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--weights", "expected lo:hi, got '" + text + "'");
    try {
        lo = std::stod(text.substr(0, colon));
        hi = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--weights", "expected lo:hi, got '" + text + "'");
    }
}

SGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wgraph::FormatError("cannot open '" + path + "'");
    return wgraph::parse_edge_list<std::string>(in);
}

void print_sssp(const wgraph::SsspResult<std::string>& r, const SGraph& g,
                const std::optional<std::string>& target, bool show_path) {
    if (target) {
        std::cout << *target << ' ' << show(r.distance.at(*target)) << '\n';
    } else {
        for (const auto& [node, dist] : r.distance) {
            const auto& par = r.parent.at(node);
            std::cout << node << ' ' << show(dist) << ' ' << (par ? *par : "-") << '\n';
        }
    }
    if (show_path && target) {
        const auto path = wgraph::reconstruct_path(r, *target);
        std::cout << "path:";
        for (const auto& node : path) std::cout << ' ' << node;
        double total = 0;
        for (std::size_t i = 1; i < path.size(); ++i)
            total += g.weight(SEdge{path[i - 1], path[i]});
        std::cout << "\npath_weight: " << show(total) << '\n';
    }
}

void print_forest(const wgraph::MstForest<std::string>& f) {
    wgraph::write_edge_list(std::cout, f.tree);
    std::cout << "# total_weight " << show(f.total_weight) << '\n';
}

void print_parent_tree(const wgraph::MstParentTree<std::string>& t) {
    for (const auto& [node, par] : t.parent)
        std::cout << node << ' ' << (par ? *par : "-") << ' ' << show(t.distance.at(node)) << '\n';
    std::cout << "# total_weight " << show(t.total_weight) << '\n';
}

void print_matrix(const wgraph::DistanceMatrix<std::string>& m) {
    for (const auto& [s, row] : m)
        for (const auto& [t, d] : row) std::cout << s << ' ' << t << ' ' << show(d) << '\n';
}

int run_algorithm(const std::string& algo, const std::string& graph_file,
                  const std::optional<std::string>& source,
                  const std::optional<std::string>& target, bool show_path) {
    const SGraph g = load_graph(graph_file);
    const bool is_sssp = algo == "bellman_ford" || algo == "dijkstra" ||
                         algo == "dijkstra_matrix" || algo == "dag_shortest_path";
    if (is_sssp && !source) {
        std::cerr << algo << " requires --source\n";
        return kExitUsage;
    }

    if (algo == "boruvka") {
        print_forest(wgraph::boruvka_mst(g));
    } else if (algo == "kruskal") {
        print_forest(wgraph::kruskal_mst(g));
    } else if (algo == "prim") {
        print_parent_tree(wgraph::prim_mst(g, source));
    } else if (algo == "prim_matrix") {
        print_parent_tree(wgraph::prim_matrix_mst(g, source));
    } else if (algo == "bellman_ford") {
        print_sssp(wgraph::bellman_ford(g, *source), g, target, show_path);
    } else if (algo == "dijkstra") {
        print_sssp(wgraph::dijkstra(g, *source), g, target, show_path);
    } else if (algo == "dijkstra_matrix") {
        print_sssp(wgraph::dijkstra_matrix(g, *source), g, target, show_path);
    } else if (algo == "dag_shortest_path") {
        print_sssp(wgraph::dag_shortest_path(g, *source), g, target, show_path);
    } else if (algo == "floyd_warshall") {
        const auto r = wgraph::floyd_warshall(g);
        if (source && target && show_path) {
            const auto path = wgraph::reconstruct_path_apsp(r.parent, *source, *target);
            std::cout << "path:";
            for (const auto& node : path) std::cout << ' ' << node;
            std::cout << "\npath_weight: " << show(r.distance.at(*source).at(*target)) << '\n';
        } else {
            print_matrix(r.distance);
        }
    } else if (algo == "johnson") {
        print_matrix(wgraph::johnson(g));
    } else if (algo == "slow_all_pairs") {
        print_matrix(wgraph::slow_all_pairs(g));
    } else if (algo == "faster_all_pairs") {
        print_matrix(wgraph::faster_all_pairs(g));
    } else {
        std::cerr << "unknown algorithm '" << algo << "'\n";
        return kExitUsage;
    }
    return 0;
}

void print_report(const std::string& suite, const wgraph::VerifyReport& report) {
    std::cout << "suite " << suite << ": " << report.instances << " instances\n";
    for (const auto& [check, count] : report.checks) {
        const auto failures = report.failure_count(check);
        std::cout << "  " << (failures == 0 ? "PASS" : "FAIL") << ' ' << check << ": " << count
                  << " checks, " << failures << " failures\n";
    }
    for (const auto& msg : report.messages) std::cout << "  " << msg << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-graph algorithms harness"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a graph and write it as an edge list");
    std::string gen_model = "random-gnp";
    std::size_t gen_n = 10;
    double gen_density = 0.5;
    std::string gen_weights = "1:100";
    bool gen_int = false;
    bool gen_distinct = false;
    bool gen_directed = false;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--model", gen_model,
                    "random-gnp|random-connected|complete|dag|tree-plus-edges");
    gen->add_option("--n", gen_n, "node count")->required();
    gen->add_option("--density", gen_density, "edge density in [0,1]");
    gen->add_option("--weights", gen_weights, "weight range lo:hi");
    gen->add_flag("--int", gen_int, "integer weights");
    gen->add_flag("--distinct", gen_distinct, "all-distinct weights");
    gen->add_flag("--directed", gen_directed, "directed graph");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output file")->required();

    // run
    auto* run = app.add_subcommand("run", "run one algorithm on an edge-list file");
    std::string run_algo;
    std::string run_graph;
    std::string run_source;
    std::string run_target;
    bool run_show_path = false;
    run->add_option("--algo", run_algo, "algorithm name")->required();
    run->add_option("--graph", run_graph, "edge-list file")->required();
    run->add_option("--source", run_source, "source node");
    run->add_option("--target", run_target, "target node");
    run->add_flag("--show-path", run_show_path, "print the reconstructed path");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification sweep against the oracles");
    std::string ver_suite;
    std::size_t ver_instances = 100;
    std::size_t ver_max_n = 0;
    std::uint64_t ver_seed = 0;
    ver->add_option("--suite", ver_suite, "mst|sssp|apsp")->required();
    ver->add_option("--instances", ver_instances, "instances per sweep");
    ver->add_option("--max-n", ver_max_n, "largest node count (default per suite)");
    ver->add_option("--seed", ver_seed, "random seed");

    // bench
    auto* ben = app.add_subcommand("bench", "time an algorithm across sizes and fit the slope");
    std::string ben_algo;
    std::string ben_sizes;
    int ben_trials = 3;
    std::string ben_model = "complete";
    double ben_density = 0.5;
    std::string ben_weights = "1:100";
    std::uint64_t ben_seed = 0;
    std::string ben_out;
    ben->add_option("--algo", ben_algo, "algorithm name")->required();
    ben->add_option("--sizes", ben_sizes, "comma-separated node counts, ascending")->required();
    ben->add_option("--trials", ben_trials, "trials per size");
    ben->add_option("--model", ben_model, "generator model");
    ben->add_option("--density", ben_density, "edge density");
    ben->add_option("--weights", ben_weights, "weight range lo:hi");
    ben->add_option("--seed", ben_seed, "random seed");
    ben->add_option("--out", ben_out, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) {
            wgraph::GeneratorSpec spec;
            spec.model = wgraph::parse_graph_model(gen_model);
            spec.n = gen_n;
            spec.density = gen_density;
            parse_weight_range(gen_weights, spec.weight_lo, spec.weight_hi);
            spec.integer_weights = gen_int;
            spec.distinct_weights = gen_distinct;
            spec.directed = gen_directed || spec.model == wgraph::GraphModel::dag;
            spec.seed = gen_seed;
            const auto g = wgraph::generate(spec);
            std::ofstream out(gen_out);
            if (!out) {
                std::cerr << "cannot write '" << gen_out << "'\n";
                return kExitFailure;
            }
            wgraph::write_edge_list(out, g);
            std::cout << "wrote " << g.v() << " nodes, " << g.e() << " edges to " << gen_out
                      << '\n';
        } else if (*run) {
            return run_algorithm(run_algo, run_graph,
                                 run_source.empty() ? std::nullopt
                                                    : std::optional<std::string>{run_source},
                                 run_target.empty() ? std::nullopt
                                                    : std::optional<std::string>{run_target},
                                 run_show_path);
        } else if (*ver) {
            wgraph::VerifyReport report;
            if (ver_suite == "mst") {
                report = wgraph::verify_mst(ver_instances, ver_max_n ? ver_max_n : 8, ver_seed);
                print_report("mst", report);
            } else if (ver_suite == "sssp") {
                report = wgraph::verify_sssp(ver_instances, ver_instances,
                                             ver_max_n ? ver_max_n : 10, ver_seed);
                print_report("sssp", report);
            } else if (ver_suite == "apsp") {
                report = wgraph::verify_apsp(ver_instances, ver_max_n ? ver_max_n : 8, ver_seed);
                const auto planted =
                    wgraph::verify_negative_cycles(ver_instances, ver_max_n ? ver_max_n : 8,
                                                   ver_seed + 1);
                print_report("apsp", report);
                print_report("apsp negative cycles", planted);
                if (!planted.ok()) return kExitFailure;
            } else {
                std::cerr << "unknown suite '" << ver_suite << "' (expected mst|sssp|apsp)\n";
                return kExitUsage;
            }
            if (!report.ok()) return kExitFailure;
            std::cout << "all checks passed\n";
        } else if (*ben) {
            std::vector<std::size_t> sizes;
            std::stringstream ss(ben_sizes);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    sizes.push_back(std::stoull(item));
                } catch (const std::exception&) {
                    std::cerr << "bad size '" << item << "'\n";
                    return kExitUsage;
                }
            }
            wgraph::GeneratorSpec base;
            base.model = wgraph::parse_graph_model(ben_model);
            base.density = ben_density;
            parse_weight_range(ben_weights, base.weight_lo, base.weight_hi);
            base.integer_weights = true;
            base.seed = ben_seed;
            const auto records = wgraph::run_bench(ben_algo, sizes, ben_trials, base);
            std::ofstream out(ben_out);
            if (!out) {
                std::cerr << "cannot write '" << ben_out << "'\n";
                return kExitFailure;
            }
            wgraph::write_bench_csv(out, records);
            std::cout << "wrote " << records.size() << " records to " << ben_out << '\n';
            if (sizes.size() >= 2) {
                std::cout << "log-log slope of median time vs V: "
                          << wgraph::fitted_loglog_slope(records) << '\n'
                          << "# compare against the theoretical exponent; expect roughly\n"
                          << "# +/-0.3-0.4 of slack for constant factors and cache effects\n";
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const wgraph::UnknownAlgorithmError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const wgraph::InvalidSpecError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const wgraph::FormatError& e) {
        std::cerr << e.what() << '\n';
        return kExitFormat;
    } catch (const wgraph::GraphError& e) {
        std::cerr << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
