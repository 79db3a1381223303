#ifndef WGRAPH_VERIFY_HPP
#define WGRAPH_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "wgraph/all_pairs.hpp"
#include "wgraph/generate.hpp"
#include "wgraph/mst.hpp"
#include "wgraph/oracles.hpp"
#include "wgraph/shortest_paths.hpp"

namespace wgraph {

/// Tallies of one verification sweep. Counters are per named check; the
/// first few failures keep a human-readable message.
struct VerifyReport {
    std::size_t instances = 0;
    std::map<std::string, std::size_t> checks;
    std::map<std::string, std::size_t> failures;
    std::vector<std::string> messages;

    [[nodiscard]] bool ok() const {
        for (const auto& [check, count] : failures)
            if (count > 0) return false;
        return true;
    }
    [[nodiscard]] std::size_t failure_count(const std::string& check) const {
        auto it = failures.find(check);
        return it == failures.end() ? 0 : it->second;
    }
    void tally(const std::string& check, bool passed, const std::string& context) {
        ++checks[check];
        failures.try_emplace(check, 0);
        if (!passed) {
            ++failures[check];
            if (messages.size() < 20) messages.push_back(check + " failed: " + context);
        }
    }
};

/// Directed graph with mixed-sign weights and no negative cycle: start from
/// non-negative integer weights and shift each arc by the potential
/// difference of its endpoints, which leaves every cycle's total weight
/// unchanged and hence non-negative.
inline Graph<int> make_mixed_sign_no_negative_cycle_graph(std::size_t n, double density,
                                                          std::uint64_t seed) {
    GeneratorSpec spec;
    spec.model = GraphModel::random_gnp;
    spec.n = n;
    spec.density = density;
    spec.weight_lo = 0;
    spec.weight_hi = 30;
    spec.integer_weights = true;
    spec.directed = true;
    spec.seed = seed;
    const Graph<int> base = generate(spec);

    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::uniform_int_distribution<int> potential(-15, 15);
    std::map<int, int> phi;
    for (int node : base.nodes()) phi[node] = potential(rng);

    Graph<int> shifted(0, true);
    for (int node : base.nodes()) shifted.add_node(node);
    for (const auto& edge : base.edges())
        shifted.add_edge(Edge<int>{edge.source, edge.target,
                                   edge.weight + phi.at(edge.source) - phi.at(edge.target)});
    return shifted;
}

/// Directed graph with a planted negative cycle; `cycle_node` lies on the
/// cycle, so Bellman-Ford from it must detect.
struct PlantedNegativeCycle {
    Graph<int> graph;
    int cycle_node = 0;
};

inline PlantedNegativeCycle make_negative_cycle_graph(std::size_t n, double density,
                                                      std::uint64_t seed) {
    GeneratorSpec spec;
    spec.model = GraphModel::random_gnp;
    spec.n = std::max<std::size_t>(n, 2);
    spec.density = density;
    spec.weight_lo = 0;
    spec.weight_hi = 30;
    spec.integer_weights = true;
    spec.directed = true;
    spec.seed = seed;
    Graph<int> g = generate(spec);

    std::mt19937_64 rng(seed ^ 0xc1c1eULL);
    std::vector<int> nodes = g.nodes();
    std::shuffle(nodes.begin(), nodes.end(), rng);
    const std::size_t len =
        std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(nodes.size(), 5))(rng);

    std::uniform_int_distribution<int> small(-5, 5);
    long long planted_total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int from = nodes[i];
        const int to = nodes[(i + 1) % len];
        int w = small(rng);
        if (i + 1 == len) {
            const int slack = std::uniform_int_distribution<int>(1, 10)(rng);
            w = static_cast<int>(-planted_total) - slack;
        }
        planted_total += w;
        if (g.has_edge(Edge<int>{from, to})) g.del_edge(Edge<int>{from, to});
        g.add_edge(Edge<int>{from, to, static_cast<double>(w)});
    }
    return {std::move(g), nodes[0]};
}

namespace detail {

/// Tree edges of a parent-form MST as (low, high, weight) triples.
inline std::set<std::tuple<int, int, double>> parent_tree_edges(const MstParentTree<int>& t) {
    std::set<std::tuple<int, int, double>> out;
    for (const auto& [node, par] : t.parent)
        if (par) out.emplace(std::min(*par, node), std::max(*par, node), t.distance.at(node));
    return out;
}

inline std::set<std::tuple<int, int, double>> forest_edges(const MstForest<int>& f) {
    std::set<std::tuple<int, int, double>> out;
    for (const auto& edge : f.tree.edges()) out.emplace(edge.source, edge.target, edge.weight);
    return out;
}

/// Path soundness for one shortest-path tree: every finite target's
/// reconstructed path starts at the source, ends at the target, walks only
/// existing arcs, and its weight sum equals the reported distance exactly.
inline bool path_is_sound(const Graph<int>& g, const SsspResult<int>& r, int target) {
    const auto path = reconstruct_path(r, target);
    if (path.empty() || path.front() != r.source || path.back() != target) return false;
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!g.has_edge(Edge<int>{path[i - 1], path[i]})) return false;
        total += g.weight(Edge<int>{path[i - 1], path[i]});
    }
    return total == r.distance.at(target);
}

inline bool apsp_path_is_sound(const Graph<int>& g, const FloydWarshallResult<int>& r, int source,
                               int target) {
    const auto path = reconstruct_path_apsp(r.parent, source, target);
    if (path.empty() || path.front() != source || path.back() != target) return false;
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!g.has_edge(Edge<int>{path[i - 1], path[i]})) return false;
        total += g.weight(Edge<int>{path[i - 1], path[i]});
    }
    return total == r.distance.at(source).at(target);
}

} // namespace detail

/// MST sweep: on seeded random connected undirected graphs with distinct
/// integer weights, all four algorithms must match the exhaustive oracle
/// weight and, weights being distinct, return the identical edge set.
inline VerifyReport verify_mst(std::size_t instances, std::size_t max_n, std::uint64_t seed) {
    VerifyReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(2, std::min(max_n, kOracleMaxMstNodes));
    std::uniform_real_distribution<double> pick_density(0.2, 0.7);

    for (std::size_t k = 0; k < instances; ++k) {
        GeneratorSpec spec;
        spec.model = GraphModel::random_connected;
        spec.n = pick_n(rng);
        spec.density = pick_density(rng);
        spec.weight_lo = 1;
        spec.weight_hi = 200;
        spec.integer_weights = true;
        spec.distinct_weights = true;
        spec.seed = rng();
        const Graph<int> g = generate(spec);
        ++report.instances;
        const std::string context = "mst instance " + std::to_string(k);

        const double want = oracle_mst_weight(g);
        const auto b = boruvka_mst(g);
        const auto kr = kruskal_mst(g);
        const auto p = prim_mst(g);
        const auto pm = prim_matrix_mst(g);
        report.tally("boruvka_weight", b.total_weight == want, context);
        report.tally("kruskal_weight", kr.total_weight == want, context);
        report.tally("prim_weight", p.total_weight == want, context);
        report.tally("prim_matrix_weight", pm.total_weight == want, context);

        const auto edges = detail::forest_edges(b);
        report.tally("edge_set_agreement",
                     edges == detail::forest_edges(kr) && edges == detail::parent_tree_edges(p) &&
                         edges == detail::parent_tree_edges(pm),
                     context);
    }
    return report;
}

/// SSSP sweep: Dijkstra (both variants) and Bellman-Ford against the
/// exhaustive path-enumeration oracle on non-negative instances, for every
/// (source, target) pair, plus path soundness of every finite distance;
/// then DAG instances with mixed-sign weights where the one-pass DAG
/// algorithm must match Bellman-Ford.
inline VerifyReport verify_sssp(std::size_t instances, std::size_t dag_instances,
                                std::size_t max_n, std::uint64_t seed) {
    VerifyReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(
        2, std::min(max_n, kOracleMaxPathNodes));
    std::uniform_real_distribution<double> pick_density(0.2, 0.6);

    for (std::size_t k = 0; k < instances; ++k) {
        GeneratorSpec spec;
        spec.model = GraphModel::random_gnp;
        spec.n = pick_n(rng);
        spec.density = pick_density(rng);
        spec.weight_lo = 0;
        spec.weight_hi = 50;
        spec.integer_weights = true;
        spec.directed = true;
        spec.seed = rng();
        const Graph<int> g = generate(spec);
        ++report.instances;
        const std::string context = "sssp instance " + std::to_string(k);

        for (int source : g.nodes()) {
            const auto want = oracle_all_shortest_from(g, source);
            const auto dj = dijkstra(g, source);
            const auto dm = dijkstra_matrix(g, source);
            const auto bf = bellman_ford(g, source);
            report.tally("dijkstra_oracle", dj.distance == want, context);
            report.tally("dijkstra_matrix_oracle", dm.distance == want, context);
            report.tally("bellman_ford_oracle", bf.distance == want, context);
            for (const auto& [target, dist] : want) {
                if (dist == INF) continue;
                report.tally("dijkstra_path", detail::path_is_sound(g, dj, target), context);
                report.tally("bellman_ford_path", detail::path_is_sound(g, bf, target), context);
                report.tally("dijkstra_matrix_path", detail::path_is_sound(g, dm, target), context);
            }
        }
    }

    for (std::size_t k = 0; k < dag_instances; ++k) {
        GeneratorSpec spec;
        spec.model = GraphModel::dag;
        spec.n = pick_n(rng);
        spec.density = pick_density(rng);
        spec.weight_lo = -20;
        spec.weight_hi = 50;
        spec.integer_weights = true;
        spec.directed = true;
        spec.seed = rng();
        const Graph<int> g = generate(spec);
        ++report.instances;
        const std::string context = "dag instance " + std::to_string(k);

        for (int source : g.nodes()) {
            const auto ds = dag_shortest_path(g, source);
            const auto bf = bellman_ford(g, source);
            report.tally("dag_vs_bellman_ford", ds.distance == bf.distance, context);
            for (const auto& [target, dist] : ds.distance) {
                if (dist == INF) continue;
                report.tally("dag_path", detail::path_is_sound(g, ds, target), context);
            }
        }
    }
    return report;
}

/// APSP sweep on mixed-sign, negative-cycle-free instances: the four
/// all-pairs algorithms must return identical matrices, every row must
/// equal Bellman-Ford from that source, Floyd-Warshall paths must be sound,
/// Johnson's reweighted arcs must be non-negative, and none of the
/// algorithms may raise a false negative-cycle alarm.
inline VerifyReport verify_apsp(std::size_t instances, std::size_t max_n, std::uint64_t seed) {
    VerifyReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(2, std::min<std::size_t>(max_n, 8));
    std::uniform_real_distribution<double> pick_density(0.2, 0.7);

    for (std::size_t k = 0; k < instances; ++k) {
        const std::size_t n = pick_n(rng);
        const Graph<int> g = make_mixed_sign_no_negative_cycle_graph(n, pick_density(rng), rng());
        ++report.instances;
        const std::string context = "apsp instance " + std::to_string(k);

        try {
            const auto fw = floyd_warshall(g);
            const auto jo = johnson_detailed(g);
            const auto slow = slow_all_pairs(g);
            const auto fast = faster_all_pairs(g);
            report.tally("johnson_agreement", jo.distance == fw.distance, context);
            report.tally("slow_all_pairs_agreement", slow == fw.distance, context);
            report.tally("faster_all_pairs_agreement", fast == fw.distance, context);

            bool rows_match = true;
            for (int source : g.nodes())
                rows_match = rows_match && bellman_ford(g, source).distance == fw.distance.at(source);
            report.tally("rows_match_bellman_ford", rows_match, context);

            bool reweighted_nonnegative = true;
            for (const auto& edge : jo.reweighted.edges())
                reweighted_nonnegative = reweighted_nonnegative && edge.weight >= 0.0;
            report.tally("johnson_reweight_nonnegative", reweighted_nonnegative, context);

            bool paths_sound = true;
            for (const auto& [source, row] : fw.distance)
                for (const auto& [target, dist] : row)
                    if (dist != INF)
                        paths_sound = paths_sound && detail::apsp_path_is_sound(g, fw, source, target);
            report.tally("floyd_warshall_paths", paths_sound, context);
        } catch (const NegativeCycleError&) {
            report.tally("no_false_negative_cycle_alarm", false, context);
            continue;
        }
        report.tally("no_false_negative_cycle_alarm", true, context);
    }
    return report;
}

/// Negative-cycle sweep: every planted instance must raise on Bellman-Ford
/// from a cycle node, on Floyd-Warshall, and on Johnson.
inline VerifyReport verify_negative_cycles(std::size_t instances, std::size_t max_n,
                                           std::uint64_t seed) {
    VerifyReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(3, std::max<std::size_t>(max_n, 3));
    std::uniform_real_distribution<double> pick_density(0.2, 0.7);

    for (std::size_t k = 0; k < instances; ++k) {
        const auto planted = make_negative_cycle_graph(pick_n(rng), pick_density(rng), rng());
        ++report.instances;
        const std::string context = "negative-cycle instance " + std::to_string(k);

        auto detects = [&](auto&& call) {
            try {
                call();
                return false;
            } catch (const NegativeCycleError&) {
                return true;
            }
        };
        report.tally("bellman_ford_detects",
                     detects([&] { bellman_ford(planted.graph, planted.cycle_node); }), context);
        report.tally("floyd_warshall_detects", detects([&] { floyd_warshall(planted.graph); }),
                     context);
        report.tally("johnson_detects", detects([&] { johnson(planted.graph); }), context);
    }
    return report;
}

} // namespace wgraph

#endif // WGRAPH_VERIFY_HPP
