#ifndef WGRAPH_GENERATE_HPP
#define WGRAPH_GENERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wgraph/graph.hpp"

namespace wgraph {

/// Test-instance families the harness can generate.
enum class GraphModel {
    random_gnp,      ///< each node pair becomes an edge with probability `density`
    random_connected,///< uniform random spanning tree plus extra edges up to `density`
    complete,        ///< every node pair
    dag,             ///< arcs only forward along a hidden random node order
    tree_plus_edges, ///< uniform random spanning tree plus round(density*n) extra edges
};

inline std::string to_string(GraphModel m) {
    switch (m) {
        case GraphModel::random_gnp: return "random-gnp";
        case GraphModel::random_connected: return "random-connected";
        case GraphModel::complete: return "complete";
        case GraphModel::dag: return "dag";
        case GraphModel::tree_plus_edges: return "tree-plus-edges";
    }
    return "?";
}

inline GraphModel parse_graph_model(const std::string& name) {
    if (name == "random-gnp") return GraphModel::random_gnp;
    if (name == "random-connected") return GraphModel::random_connected;
    if (name == "complete") return GraphModel::complete;
    if (name == "dag") return GraphModel::dag;
    if (name == "tree-plus-edges") return GraphModel::tree_plus_edges;
    throw InvalidSpecError("unknown graph model '" + name + "'");
}

/// Everything needed to generate one test instance deterministically:
/// identical spec and seed give a structurally identical graph.
struct GeneratorSpec {
    GraphModel model = GraphModel::random_gnp;
    std::size_t n = 1;
    double density = 0.5;
    double weight_lo = 1.0;
    double weight_hi = 100.0;
    bool integer_weights = true;
    bool distinct_weights = false;
    bool directed = false;
    std::uint64_t seed = 0;
};

namespace detail {

/// Uniform random labeled tree on 0..n-1 decoded from a random Prufer
/// sequence; every labeled tree is equally likely.
inline std::vector<std::pair<int, int>> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    if (n < 2) return edges;
    if (n == 2) return {{0, 1}};

    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = pick(rng);

    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    std::set<int> leaves;
    for (int i = 0; i < static_cast<int>(n); ++i)
        if (degree[i] == 1) leaves.insert(i);

    for (int x : prufer) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return edges;
}

} // namespace detail

/// Generates a weighted graph over nodes 0..n-1 per the spec. Structure is
/// drawn first, then weights are assigned to the edge list in order, all
/// from one seeded generator.
inline Graph<int> generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw InvalidSpecError("generate: n must be >= 1");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw InvalidSpecError("generate: density must be in [0, 1]");
    if (spec.weight_lo > spec.weight_hi)
        throw InvalidSpecError("generate: weight range is empty");
    if (spec.model == GraphModel::dag && !spec.directed)
        throw InvalidSpecError("generate: the dag model is directed");
    if ((spec.model == GraphModel::random_connected || spec.model == GraphModel::tree_plus_edges) &&
        spec.directed)
        throw InvalidSpecError("generate: " + to_string(spec.model) + " is undirected");

    std::mt19937_64 rng(spec.seed);
    const int n = static_cast<int>(spec.n);
    std::vector<std::pair<int, int>> endpoints;

    auto all_undirected_pairs = [&] {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        return pairs;
    };
    auto extra_edges_on_top_of_tree = [&](std::size_t extra) {
        endpoints = detail::random_tree_edges(spec.n, rng);
        std::set<std::pair<int, int>> present;
        for (auto [a, b] : endpoints) present.insert(std::minmax(a, b));
        auto candidates = all_undirected_pairs();
        std::erase_if(candidates, [&](const auto& p) { return present.contains(p); });
        std::shuffle(candidates.begin(), candidates.end(), rng);
        candidates.resize(std::min(extra, candidates.size()));
        endpoints.insert(endpoints.end(), candidates.begin(), candidates.end());
    };

    switch (spec.model) {
        case GraphModel::complete: {
            if (spec.directed) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j) endpoints.emplace_back(i, j);
            } else {
                endpoints = all_undirected_pairs();
            }
            break;
        }
        case GraphModel::random_gnp: {
            std::bernoulli_distribution flip(spec.density);
            if (spec.directed) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j && flip(rng)) endpoints.emplace_back(i, j);
            } else {
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (flip(rng)) endpoints.emplace_back(i, j);
            }
            break;
        }
        case GraphModel::random_connected: {
            const double max_edges = static_cast<double>(n) * (n - 1) / 2.0;
            const auto target = static_cast<std::size_t>(std::lround(spec.density * max_edges));
            const std::size_t tree_edges = spec.n - 1;
            extra_edges_on_top_of_tree(target > tree_edges ? target - tree_edges : 0);
            break;
        }
        case GraphModel::tree_plus_edges: {
            extra_edges_on_top_of_tree(
                static_cast<std::size_t>(std::lround(spec.density * static_cast<double>(n))));
            break;
        }
        case GraphModel::dag: {
            std::vector<int> order(spec.n);
            for (int i = 0; i < n; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            std::bernoulli_distribution flip(spec.density);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (flip(rng)) endpoints.emplace_back(order[i], order[j]);
            break;
        }
    }

    std::vector<double> weights(endpoints.size());
    if (spec.integer_weights) {
        const auto lo = static_cast<long long>(std::ceil(spec.weight_lo));
        const auto hi = static_cast<long long>(std::floor(spec.weight_hi));
        if (lo > hi) throw InvalidSpecError("generate: no integers in the weight range");
        if (spec.distinct_weights) {
            const auto range = static_cast<unsigned long long>(hi - lo) + 1;
            if (range < endpoints.size())
                throw InvalidSpecError("generate: weight range too small for distinct weights");
            if (range <= 4 * endpoints.size()) {
                // Narrow range: shuffle the whole range instead of rejection
                // sampling, which could stall near exhaustion.
                std::vector<long long> pool(range);
                for (unsigned long long i = 0; i < range; ++i) pool[i] = lo + static_cast<long long>(i);
                std::shuffle(pool.begin(), pool.end(), rng);
                for (std::size_t i = 0; i < weights.size(); ++i)
                    weights[i] = static_cast<double>(pool[i]);
            } else {
                std::set<long long> used;
                std::uniform_int_distribution<long long> draw(lo, hi);
                for (double& w : weights) {
                    long long x = draw(rng);
                    while (used.contains(x)) x = draw(rng);
                    used.insert(x);
                    w = static_cast<double>(x);
                }
            }
        } else {
            std::uniform_int_distribution<long long> draw(lo, hi);
            for (double& w : weights) w = static_cast<double>(draw(rng));
        }
    } else {
        std::uniform_real_distribution<double> draw(spec.weight_lo, spec.weight_hi);
        std::set<double> used;
        for (double& w : weights) {
            w = draw(rng);
            if (spec.distinct_weights) {
                while (used.contains(w)) w = draw(rng);
                used.insert(w);
            }
        }
    }

    Graph<int> g(spec.n, spec.directed);
    for (int i = 0; i < n; ++i) g.add_node(i);
    for (std::size_t i = 0; i < endpoints.size(); ++i)
        g.add_edge(Edge<int>{endpoints[i].first, endpoints[i].second, weights[i]});
    return g;
}

} // namespace wgraph

#endif // WGRAPH_GENERATE_HPP
