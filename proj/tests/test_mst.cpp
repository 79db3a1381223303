#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "wgraph/generate.hpp"
#include "wgraph/mst.hpp"
#include "wgraph/oracles.hpp"
#include "wgraph/union_find.hpp"

using wgraph::boruvka_mst;
using wgraph::Edge;
using wgraph::Graph;
using wgraph::kruskal_mst;
using wgraph::prim_matrix_mst;
using wgraph::prim_mst;

namespace {

using SEdge = Edge<std::string>;

Graph<std::string> example_graph() {
    Graph<std::string> g(3, false);
    g.add_edge(SEdge{"A", "B", 5});
    g.add_edge(SEdge{"A", "C", 7});
    return g;
}

/// Tree edges of either result form, orientation-normalized.
template <typename NodeId>
std::set<std::tuple<NodeId, NodeId, double>> tree_edges(const wgraph::MstForest<NodeId>& f) {
    std::set<std::tuple<NodeId, NodeId, double>> out;
    for (const auto& e : f.tree.edges()) out.emplace(e.source, e.target, e.weight);
    return out;
}

template <typename NodeId>
std::set<std::tuple<NodeId, NodeId, double>> tree_edges(const wgraph::MstParentTree<NodeId>& t) {
    std::set<std::tuple<NodeId, NodeId, double>> out;
    for (const auto& [node, par] : t.parent)
        if (par) out.emplace(std::min(*par, node), std::max(*par, node), t.distance.at(node));
    return out;
}

std::size_t component_count(const Graph<int>& g) {
    wgraph::UnionFind<int> uf;
    for (int node : g.nodes()) uf.create(node);
    for (const auto& e : g.edges()) uf.merge(e.source, e.target);
    return uf.set_count();
}

Graph<int> random_connected(std::size_t n, double density, std::uint64_t seed,
                            bool distinct = true) {
    wgraph::GeneratorSpec spec;
    spec.model = wgraph::GraphModel::random_connected;
    spec.n = n;
    spec.density = density;
    spec.weight_lo = 1;
    spec.weight_hi = distinct ? 500 : 5;
    spec.integer_weights = true;
    spec.distinct_weights = distinct;
    spec.seed = seed;
    return wgraph::generate(spec);
}

} // namespace

TEST_CASE("boruvka on the two-edge example keeps both edges") {
    const auto mst = boruvka_mst(example_graph());
    CHECK(mst.total_weight == 12.0);
    CHECK(mst.tree.e() == 2);
    CHECK(mst.tree.v() == 3);
    CHECK(tree_edges(mst) == std::set<std::tuple<std::string, std::string, double>>{
                                 {"A", "B", 5.0}, {"A", "C", 7.0}});
}

TEST_CASE("boruvka on a single node yields an empty forest") {
    Graph<std::string> g;
    g.add_node("A");
    const auto mst = boruvka_mst(g);
    CHECK(mst.total_weight == 0.0);
    CHECK(mst.tree.v() == 1);
    CHECK(mst.tree.e() == 0);
}

TEST_CASE("boruvka matches the exhaustive oracle on random connected graphs") {
    std::mt19937_64 rng(41);
    for (int run = 0; run < 60; ++run) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        const auto g = random_connected(n, 0.5, rng());
        CHECK(boruvka_mst(g).total_weight == wgraph::oracle_mst_weight(g));
    }
}

TEST_CASE("prim on the two-edge example roots both leaves at A") {
    const auto mst = prim_mst(example_graph(), std::optional<std::string>{"A"});
    REQUIRE(mst.source == std::optional<std::string>{"A"});
    CHECK(mst.parent.at("A") == std::nullopt);
    CHECK(mst.parent.at("B") == std::optional<std::string>{"A"});
    CHECK(mst.parent.at("C") == std::optional<std::string>{"A"});
    CHECK(mst.total_weight == 12.0);
}

TEST_CASE("prim handles negative weights") {
    Graph<std::string> g;
    g.add_edge(SEdge{"A", "B", -2});
    g.add_edge(SEdge{"B", "C", -3});
    g.add_edge(SEdge{"A", "C", 1});
    // Cheapest of the three spanning trees, confirmed by the oracle.
    CHECK(wgraph::oracle_mst_weight(g) == -5.0);
    const auto mst = prim_mst(g, std::optional<std::string>{"A"});
    CHECK(mst.total_weight == -5.0);
    CHECK(tree_edges(mst) == std::set<std::tuple<std::string, std::string, double>>{
                                 {"A", "B", -2.0}, {"B", "C", -3.0}});
}

TEST_CASE("prim from an isolated node spans only that node") {
    Graph<std::string> g;
    g.add_edge(SEdge{"A", "B", 1});
    g.add_node("Z");
    const auto mst = prim_mst(g, std::optional<std::string>{"Z"});
    CHECK(mst.total_weight == 0.0);
    CHECK(mst.parent.at("Z") == std::nullopt);
    CHECK(mst.distance.at("Z") == 0.0);
    CHECK(mst.distance.at("A") == wgraph::INF);
    CHECK(mst.parent.at("A") == std::nullopt);
    CHECK(tree_edges(mst).empty());
}

TEST_CASE("prim matrix variant reproduces prim exactly") {
    const auto a = prim_mst(example_graph(), std::optional<std::string>{"A"});
    const auto b = prim_matrix_mst(example_graph(), std::optional<std::string>{"A"});
    CHECK(a.parent == b.parent);
    CHECK(a.distance == b.distance);
    CHECK(a.total_weight == b.total_weight);

    std::mt19937_64 rng(43);
    for (int run = 0; run < 100; ++run) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        const auto g = random_connected(n, 0.5, rng(), false);
        const auto heap = prim_mst(g);
        const auto matrix = prim_matrix_mst(g);
        CHECK(heap.total_weight == matrix.total_weight);
        CHECK(heap.parent == matrix.parent);
        CHECK(heap.distance == matrix.distance);
    }
}

TEST_CASE("prim matrix agrees with kruskal on a complete graph") {
    Graph<int> k4;
    int w = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(Edge<int>{i, j, static_cast<double>(w++)});
    CHECK(prim_matrix_mst(k4).total_weight == kruskal_mst(k4).total_weight);
}

TEST_CASE("kruskal on the two-edge example") {
    CHECK(kruskal_mst(example_graph()).total_weight == 12.0);
}

TEST_CASE("kruskal builds a forest on disconnected input") {
    Graph<int> g;
    g.add_edge(Edge<int>{0, 1, 1});
    g.add_edge(Edge<int>{1, 2, 2});
    g.add_edge(Edge<int>{0, 2, 3});
    g.add_edge(Edge<int>{3, 4, 4});
    const auto mst = kruskal_mst(g);
    CHECK(mst.tree.e() == g.v() - 2); // two components
    CHECK(mst.tree.v() == g.v());
    CHECK(mst.total_weight == 7.0);
}

TEST_CASE("kruskal and boruvka agree on weight when weights repeat") {
    std::mt19937_64 rng(47);
    for (int run = 0; run < 200; ++run) {
        wgraph::GeneratorSpec spec;
        spec.model = wgraph::GraphModel::random_gnp;
        spec.n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
        spec.density = 0.5;
        spec.weight_lo = 1;
        spec.weight_hi = 4; // repeats guaranteed
        spec.integer_weights = true;
        spec.seed = rng();
        const auto g = wgraph::generate(spec);
        const auto k = kruskal_mst(g);
        const auto b = boruvka_mst(g);
        CHECK(k.total_weight == b.total_weight);
        CHECK(k.tree.e() == b.tree.e());
    }
}

TEST_CASE("directed input is rejected by every MST algorithm") {
    Graph<int> d(0, true);
    d.add_edge(Edge<int>{0, 1, 1});
    CHECK_THROWS_AS(boruvka_mst(d), wgraph::WrongModeError);
    CHECK_THROWS_AS(kruskal_mst(d), wgraph::WrongModeError);
    CHECK_THROWS_AS(prim_mst(d), wgraph::WrongModeError);
    CHECK_THROWS_AS(prim_matrix_mst(d), wgraph::WrongModeError);
}

TEST_CASE("prim with a missing source is rejected") {
    auto g = example_graph();
    CHECK_THROWS_AS(prim_mst(g, std::optional<std::string>{"Z"}), wgraph::MissingNodeError);
    CHECK_THROWS_AS(prim_matrix_mst(g, std::optional<std::string>{"Z"}), wgraph::MissingNodeError);
}

TEST_CASE("all algorithms return one weight, and one edge set when weights are distinct") {
    std::mt19937_64 rng(53);
    for (int run = 0; run < 100; ++run) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        const auto g = random_connected(n, 0.6, rng());
        const auto b = boruvka_mst(g);
        const auto k = kruskal_mst(g);
        const auto p = prim_mst(g);
        const auto pm = prim_matrix_mst(g);
        CHECK(b.total_weight == k.total_weight);
        CHECK(b.total_weight == p.total_weight);
        CHECK(b.total_weight == pm.total_weight);
        const auto edges = tree_edges(b);
        CHECK(edges == tree_edges(k));
        CHECK(edges == tree_edges(p));
        CHECK(edges == tree_edges(pm));
    }
}

TEST_CASE("forest edge count, acyclicity, and the cut property hold") {
    std::mt19937_64 rng(59);
    for (int run = 0; run < 60; ++run) {
        wgraph::GeneratorSpec spec;
        spec.model = wgraph::GraphModel::random_gnp; // may be disconnected
        spec.n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        spec.density = 0.45;
        spec.weight_lo = 1;
        spec.weight_hi = 300;
        spec.integer_weights = true;
        spec.distinct_weights = true;
        spec.seed = rng();
        const auto g = wgraph::generate(spec);
        const auto mst = kruskal_mst(g);

        CHECK(mst.tree.e() == g.v() - component_count(g));

        // Acyclicity: replay tree edges through a fresh union-find.
        wgraph::UnionFind<int> uf;
        for (int node : mst.tree.nodes()) uf.create(node);
        for (const auto& e : mst.tree.edges()) {
            CHECK(uf.find(e.source) != uf.find(e.target));
            uf.merge(e.source, e.target);
        }

        // Cut property: each tree edge is a minimum-weight edge across the
        // cut induced by removing it from its tree.
        for (const auto& cut_edge : mst.tree.edges()) {
            auto tree = mst.tree;
            tree.del_edge(cut_edge);
            std::set<int> side;
            std::vector<int> stack{cut_edge.source};
            side.insert(cut_edge.source);
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (const auto& [t, w] : tree.neighbors(u))
                    if (side.insert(t).second) stack.push_back(t);
            }
            double min_crossing = wgraph::INF;
            for (const auto& e : g.edges())
                if (side.contains(e.source) != side.contains(e.target))
                    min_crossing = std::min(min_crossing, e.weight);
            CHECK(cut_edge.weight == min_crossing);
        }
    }
}

TEST_CASE("every tree edge exists in the input with the same weight") {
    std::mt19937_64 rng(61);
    for (int run = 0; run < 50; ++run) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
        const auto g = random_connected(n, 0.5, rng());
        for (const auto& e : boruvka_mst(g).tree.edges()) {
            CHECK(g.has_edge(e));
            CHECK(g.weight(e) == e.weight);
        }
    }
}
