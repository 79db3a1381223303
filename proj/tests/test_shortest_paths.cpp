#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "wgraph/generate.hpp"
#include "wgraph/oracles.hpp"
#include "wgraph/shortest_paths.hpp"

using wgraph::bellman_ford;
using wgraph::dag_shortest_path;
using wgraph::dijkstra;
using wgraph::dijkstra_matrix;
using wgraph::DistanceMap;
using wgraph::Edge;
using wgraph::Graph;
using wgraph::INF;
using wgraph::ParentMap;
using wgraph::reconstruct_path;
using wgraph::relax;

namespace {

using SEdge = Edge<std::string>;

Graph<int> random_directed(std::size_t n, double density, std::uint64_t seed, double lo = 0,
                           double hi = 50) {
    wgraph::GeneratorSpec spec;
    spec.model = wgraph::GraphModel::random_gnp;
    spec.n = n;
    spec.density = density;
    spec.weight_lo = lo;
    spec.weight_hi = hi;
    spec.integer_weights = true;
    spec.directed = true;
    spec.seed = seed;
    return wgraph::generate(spec);
}

} // namespace

TEST_CASE("relax updates only on improvement") {
    DistanceMap<std::string> dist{{"A", 0.0}, {"B", INF}};
    ParentMap<std::string> parent{{"A", std::nullopt}, {"B", std::nullopt}};

    CHECK(relax(dist, parent, SEdge{"A", "B", 5}));
    CHECK(dist.at("B") == 5.0);
    CHECK(parent.at("B") == std::optional<std::string>{"A"});

    dist = {{"A", 0.0}, {"B", 3.0}};
    parent = {{"A", std::nullopt}, {"B", std::nullopt}};
    CHECK_FALSE(relax(dist, parent, SEdge{"A", "B", 5}));
    CHECK(dist.at("B") == 3.0);
    CHECK(parent.at("B") == std::nullopt);

    // An unreachable source never fires: INF + 5 is not < INF.
    dist = {{"A", INF}, {"B", INF}};
    parent = {{"A", std::nullopt}, {"B", std::nullopt}};
    CHECK_FALSE(relax(dist, parent, SEdge{"A", "B", 5}));
    CHECK(dist.at("B") == INF);
}

TEST_CASE("bellman-ford handles negative edges") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", 5});
    g.add_edge(SEdge{"B", "C", -2});
    g.add_edge(SEdge{"A", "C", 7});

    // Enumerating both A-to-C paths: direct 7, via B 5 + (-2) = 3.
    CHECK(wgraph::oracle_shortest_path(g, "A", "C") == 3.0);

    const auto r = bellman_ford(g, "A");
    CHECK(r.distance == DistanceMap<std::string>{{"A", 0.0}, {"B", 5.0}, {"C", 3.0}});
    CHECK(r.distance == wgraph::oracle_all_shortest_from(g, "A"));
}

TEST_CASE("bellman-ford on a single node") {
    Graph<std::string> g(0, true);
    g.add_node("A");
    const auto r = bellman_ford(g, "A");
    CHECK(r.distance == DistanceMap<std::string>{{"A", 0.0}});
    CHECK(r.parent.at("A") == std::nullopt);
}

TEST_CASE("bellman-ford raises on a reachable negative cycle") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", 1});
    g.add_edge(SEdge{"B", "A", -3});
    CHECK_THROWS_AS(bellman_ford(g, "A"), wgraph::NegativeCycleError);
}

TEST_CASE("bellman-ford ignores a negative cycle the source cannot reach") {
    Graph<std::string> g(0, true);
    g.add_node("S");
    g.add_edge(SEdge{"X", "Y", 1});
    g.add_edge(SEdge{"Y", "X", -3});
    const auto r = bellman_ford(g, "S");
    CHECK(r.distance.at("X") == INF);
    CHECK(r.distance.at("Y") == INF);
}

TEST_CASE("sssp algorithms reject undirected graphs and missing sources") {
    Graph<std::string> und(0, false);
    und.add_edge(SEdge{"A", "B", 1});
    CHECK_THROWS_AS(bellman_ford(und, "A"), wgraph::WrongModeError);
    CHECK_THROWS_AS(dijkstra(und, "A"), wgraph::WrongModeError);
    CHECK_THROWS_AS(dijkstra_matrix(und, "A"), wgraph::WrongModeError);
    CHECK_THROWS_AS(dag_shortest_path(und, "A"), wgraph::WrongModeError);

    Graph<std::string> d(0, true);
    d.add_edge(SEdge{"A", "B", 1});
    CHECK_THROWS_AS(bellman_ford(d, "Z"), wgraph::MissingNodeError);
    CHECK_THROWS_AS(dijkstra(d, "Z"), wgraph::MissingNodeError);
}

TEST_CASE("dijkstra on the three-node example") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", 5});
    g.add_edge(SEdge{"A", "C", 7});
    g.add_edge(SEdge{"B", "C", 1});

    CHECK(wgraph::oracle_shortest_path(g, "A", "C") == 6.0);
    const auto r = dijkstra(g, "A");
    CHECK(r.distance == DistanceMap<std::string>{{"A", 0.0}, {"B", 5.0}, {"C", 6.0}});
    CHECK(dijkstra_matrix(g, "A").distance == r.distance);
}

TEST_CASE("dijkstra from the only node") {
    Graph<std::string> g(0, true);
    g.add_node("A");
    const auto r = dijkstra(g, "A");
    CHECK(r.distance == DistanceMap<std::string>{{"A", 0.0}});
}

TEST_CASE("dijkstra rejects negative weights up front") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", -1});
    g.add_edge(SEdge{"B", "C", 1});
    CHECK_THROWS_AS(dijkstra(g, "A"), wgraph::NegativeWeightError);
    CHECK_THROWS_AS(dijkstra_matrix(g, "A"), wgraph::NegativeWeightError);
}

TEST_CASE("dijkstra variants agree with bellman-ford on random graphs") {
    std::mt19937_64 rng(71);
    for (int run = 0; run < 300; ++run) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        const auto g = random_directed(n, 0.4, rng());
        for (int source : g.nodes()) {
            const auto bf = bellman_ford(g, source);
            const auto dj = dijkstra(g, source);
            const auto dm = dijkstra_matrix(g, source);
            CHECK(dj.distance == bf.distance);
            CHECK(dm.distance == dj.distance);
        }
    }
}

TEST_CASE("on a complete graph of unit weights every node is one step away") {
    wgraph::GeneratorSpec spec;
    spec.model = wgraph::GraphModel::complete;
    spec.n = 6;
    spec.weight_lo = 1;
    spec.weight_hi = 1;
    spec.directed = true;
    spec.seed = 1;
    const auto g = wgraph::generate(spec);
    const auto r = dijkstra_matrix(g, 0);
    for (int node : g.nodes()) CHECK(r.distance.at(node) == (node == 0 ? 0.0 : 1.0));
}

TEST_CASE("dijkstra settles nodes in non-decreasing distance order") {
    std::mt19937_64 rng(73);
    for (int run = 0; run < 50; ++run) {
        const auto g = random_directed(9, 0.4, rng());
        std::vector<double> heap_order, matrix_order;
        dijkstra(g, 0, [&](const int&, double d) { heap_order.push_back(d); });
        dijkstra_matrix(g, 0, [&](const int&, double d) { matrix_order.push_back(d); });
        CHECK(std::is_sorted(heap_order.begin(), heap_order.end()));
        CHECK(std::is_sorted(matrix_order.begin(), matrix_order.end()));
    }
}

TEST_CASE("dag shortest path follows a negative chain") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", -1});
    g.add_edge(SEdge{"B", "C", -1});
    const auto r = dag_shortest_path(g, "A");
    CHECK(r.distance == DistanceMap<std::string>{{"A", 0.0}, {"B", -1.0}, {"C", -2.0}});
}

TEST_CASE("dag shortest path picks the cheaper diamond side") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", 1});
    g.add_edge(SEdge{"A", "C", 4});
    g.add_edge(SEdge{"B", "C", 2});
    CHECK(wgraph::oracle_shortest_path(g, "A", "C") == 3.0);
    CHECK(dag_shortest_path(g, "A").distance.at("C") == 3.0);
}

TEST_CASE("dag shortest path rejects cyclic graphs") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", 1});
    g.add_edge(SEdge{"B", "A", 1});
    CHECK_THROWS_AS(dag_shortest_path(g, "A"), wgraph::CyclicGraphError);
}

TEST_CASE("dag shortest path agrees with bellman-ford on mixed-sign DAGs") {
    std::mt19937_64 rng(79);
    for (int run = 0; run < 200; ++run) {
        wgraph::GeneratorSpec spec;
        spec.model = wgraph::GraphModel::dag;
        spec.n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        spec.density = 0.5;
        spec.weight_lo = -20;
        spec.weight_hi = 50;
        spec.integer_weights = true;
        spec.directed = true;
        spec.seed = rng();
        const auto g = wgraph::generate(spec);
        for (int source : g.nodes())
            CHECK(dag_shortest_path(g, source).distance == bellman_ford(g, source).distance);
    }
}

TEST_CASE("path reconstruction walks parent links back to the source") {
    Graph<std::string> g(0, true);
    g.add_edge(SEdge{"A", "B", 5});
    g.add_edge(SEdge{"B", "C", 1});
    const auto r = bellman_ford(g, "A");

    CHECK(reconstruct_path(r, "A") == std::vector<std::string>{"A"});
    CHECK(reconstruct_path(r, "C") == std::vector<std::string>{"A", "B", "C"});

    Graph<std::string> g2(0, true);
    g2.add_edge(SEdge{"A", "B", 1});
    g2.add_node("Z");
    const auto r2 = bellman_ford(g2, "A");
    CHECK_THROWS_AS(reconstruct_path(r2, "Z"), wgraph::NoPathError);
    CHECK_THROWS_AS(reconstruct_path(r2, "Q"), wgraph::MissingNodeError);
}

TEST_CASE("fixpoint properties: triangle inequality and tree consistency") {
    std::mt19937_64 rng(83);
    for (int run = 0; run < 100; ++run) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        const auto g = random_directed(n, 0.4, rng());
        const auto r = dijkstra(g, 0);

        for (const auto& e : g.edges())
            CHECK(r.distance.at(e.target) <= r.distance.at(e.source) + e.weight);

        for (const auto& [node, dist] : r.distance) {
            if (dist == INF || node == r.source) continue;
            REQUIRE(r.parent.at(node).has_value());
            const auto par = *r.parent.at(node);
            CHECK(dist == r.distance.at(par) + g.weight(Edge<int>{par, node}));

            const auto path = reconstruct_path(r, node);
            double total = 0.0;
            for (std::size_t i = 1; i < path.size(); ++i)
                total += g.weight(Edge<int>{path[i - 1], path[i]});
            CHECK(total == dist);
        }
    }
}

TEST_CASE("all applicable algorithms match the enumeration oracle exactly") {
    std::mt19937_64 rng(89);
    for (int run = 0; run < 60; ++run) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        const auto g = random_directed(n, 0.4, rng());
        for (int source : g.nodes()) {
            const auto want = wgraph::oracle_all_shortest_from(g, source);
            CHECK(bellman_ford(g, source).distance == want);
            CHECK(dijkstra(g, source).distance == want);
            CHECK(dijkstra_matrix(g, source).distance == want);
        }
    }
}
