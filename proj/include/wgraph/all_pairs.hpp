#ifndef WGRAPH_ALL_PAIRS_HPP
#define WGRAPH_ALL_PAIRS_HPP

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "wgraph/distance.hpp"
#include "wgraph/graph.hpp"
#include "wgraph/shortest_paths.hpp"

namespace wgraph {

/// All-pairs distances plus per-source predecessor links for path
/// reconstruction.
template <NodeKey NodeId>
struct FloydWarshallResult {
    DistanceMatrix<NodeId> distance;
    ParentMatrix<NodeId> parent;
};

/// Floyd-Warshall, Theta(V^3): dynamic programming over a growing set of
/// allowed intermediate nodes, run in place on the nested distance map.
/// The three nested loops walk matrix rows in lockstep, one relaxation per
/// innermost step. Negative weights are allowed; a negative diagonal entry
/// after the sweep means a negative cycle and raises.
///
/// `after_pivot` is invoked with (pivot, distances-so-far) after each outer
/// iteration; the snapshots let callers observe that entries never
/// increase. The default observer is a no-op.
template <NodeKey NodeId, typename PivotObserver>
FloydWarshallResult<NodeId> floyd_warshall(const Graph<NodeId>& g, PivotObserver&& after_pivot) {
    if (!g.is_directed()) throw WrongModeError("floyd_warshall: graph is not directed");

    FloydWarshallResult<NodeId> result;
    auto& dist = result.distance;
    auto& parent = result.parent;
    const auto nodes = g.nodes();
    for (const NodeId& s : nodes) {
        DistanceMap<NodeId> drow;
        ParentMap<NodeId> prow;
        for (const NodeId& t : nodes) {
            drow.emplace_hint(drow.end(), t, s == t ? 0.0 : INF);
            prow.emplace_hint(prow.end(), t, std::nullopt);
        }
        dist.emplace_hint(dist.end(), s, std::move(drow));
        parent.emplace_hint(parent.end(), s, std::move(prow));
    }
    for (const auto& edge : g.edges()) {
        dist.at(edge.source).at(edge.target) = edge.weight;
        parent.at(edge.source).at(edge.target) = edge.source;
    }

    for (const NodeId& k : nodes) {
        const DistanceMap<NodeId>& row_k = dist.at(k);
        const ParentMap<NodeId>& prow_k = parent.at(k);
        auto prow_it = parent.begin();
        for (auto row_it = dist.begin(); row_it != dist.end(); ++row_it, ++prow_it) {
            auto& row_i = row_it->second;
            const double d_ik = row_i.at(k);
            if (d_ik == INF) continue;
            auto& prow_i = prow_it->second;
            auto kt = row_k.begin();
            auto pk = prow_k.begin();
            auto pi = prow_i.begin();
            for (auto it = row_i.begin(); it != row_i.end(); ++it, ++pi, ++kt, ++pk) {
                const double alt = d_ik + kt->second;
                if (alt < it->second) {
                    it->second = alt;
                    pi->second = pk->second;
                }
            }
        }
        after_pivot(k, std::as_const(dist));
    }

    for (const auto& [node, row] : dist)
        if (row.at(node) < 0) throw NegativeCycleError("floyd_warshall: negative cycle");
    return result;
}

template <NodeKey NodeId>
FloydWarshallResult<NodeId> floyd_warshall(const Graph<NodeId>& g) {
    return floyd_warshall(g, [](const NodeId&, const DistanceMatrix<NodeId>&) {});
}

/// Follows parent[source][.] links back from `target`. Iterative, with a
/// step counter capped at the node count to catch corrupted parent chains.
template <NodeKey NodeId>
Path<NodeId> reconstruct_path_apsp(const ParentMatrix<NodeId>& parent,
                                   const std::type_identity_t<NodeId>& source,
                                   const std::type_identity_t<NodeId>& target) {
    auto row_it = parent.find(source);
    if (row_it == parent.end()) throw MissingNodeError("reconstruct_path_apsp: source not in matrix");
    const auto& row = row_it->second;
    if (!row.contains(target)) throw MissingNodeError("reconstruct_path_apsp: target not in matrix");

    Path<NodeId> path{target};
    NodeId walk = target;
    std::size_t steps = 0;
    while (walk != source) {
        const auto& par = row.at(walk);
        if (!par) throw NoPathError("reconstruct_path_apsp: no path to target");
        if (++steps > row.size()) throw GraphError("reconstruct_path_apsp: parent chain has a cycle");
        walk = *par;
        path.push_back(walk);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

/// Everything Johnson's algorithm produces: the distances, the reweighted
/// graph whose arcs are all non-negative, and the Bellman-Ford potentials
/// that produced it.
template <NodeKey NodeId>
struct JohnsonResult {
    DistanceMatrix<NodeId> distance;
    Graph<NodeId> reweighted;
    DistanceMap<NodeId> potential;
};

/// Johnson's algorithm, O(V*E log V): Bellman-Ford potentials from a
/// virtual source turn every arc weight non-negative, then Dijkstra runs
/// from each node on the reweighted copy. The input graph is never
/// modified.
///
/// The virtual source lives in its own variant alternative, so it cannot
/// collide with any caller node id.
template <NodeKey NodeId>
JohnsonResult<NodeId> johnson_detailed(const Graph<NodeId>& g) {
    if (!g.is_directed()) throw WrongModeError("johnson: graph is not directed");

    using AugNode = std::variant<std::monostate, NodeId>;
    const AugNode virtual_source{};

    Graph<AugNode> augmented(0, true);
    augmented.add_node(virtual_source);
    for (const NodeId& node : g.nodes()) {
        augmented.add_node(AugNode{node});
        augmented.add_edge(Edge<AugNode>{virtual_source, AugNode{node}, 0.0});
    }
    for (const auto& edge : g.edges())
        augmented.add_edge(Edge<AugNode>{AugNode{edge.source}, AugNode{edge.target}, edge.weight});

    // Raises NegativeCycleError when the input has one; the virtual source
    // reaches every node, so every potential is finite.
    const auto potentials = bellman_ford(augmented, virtual_source);

    JohnsonResult<NodeId> result;
    result.reweighted = Graph<NodeId>(0, true);
    for (const NodeId& node : g.nodes()) {
        result.potential[node] = potentials.distance.at(AugNode{node});
        result.reweighted.add_node(node);
    }
    for (const auto& edge : g.edges()) {
        // (w + h(u)) - h(v): Bellman-Ford's fixpoint guarantees h(v) <= h(u) + w
        // in this exact evaluation order, so the result is never below zero.
        const double shifted =
            (edge.weight + result.potential.at(edge.source)) - result.potential.at(edge.target);
        result.reweighted.add_edge(Edge<NodeId>{edge.source, edge.target, shifted});
    }

    for (const NodeId& source : g.nodes()) {
        const auto sp = dijkstra(result.reweighted, source);
        const double h_source = result.potential.at(source);
        auto& row = result.distance[source];
        for (const auto& [target, shifted_dist] : sp.distance)
            row[target] = (shifted_dist - h_source) + result.potential.at(target);
    }
    return result;
}

/// Johnson's algorithm returning just the distance matrix.
template <NodeKey NodeId>
DistanceMatrix<NodeId> johnson(const Graph<NodeId>& g) {
    return johnson_detailed(g).distance;
}

/// Arc-weight matrix of the min-plus formulation: zero diagonal, stored arc
/// weights, INF elsewhere.
template <NodeKey NodeId>
DistanceMatrix<NodeId> weight_matrix(const Graph<NodeId>& g) {
    DistanceMatrix<NodeId> w;
    const auto nodes = g.nodes();
    for (const NodeId& s : nodes) {
        auto& row = w[s];
        for (const NodeId& t : nodes) row[t] = s == t ? 0.0 : INF;
    }
    for (const auto& edge : g.edges()) w[edge.source][edge.target] = edge.weight;
    return w;
}

/// Identity element of the min-plus product: zero diagonal, INF elsewhere.
template <NodeKey NodeId>
DistanceMatrix<NodeId> min_plus_identity(const std::vector<NodeId>& nodes) {
    DistanceMatrix<NodeId> m;
    for (const NodeId& s : nodes) {
        auto& row = m[s];
        for (const NodeId& t : nodes) row[t] = s == t ? 0.0 : INF;
    }
    return m;
}

namespace detail {

template <NodeKey NodeId>
void require_square_same_nodes(const DistanceMatrix<NodeId>& x, const DistanceMatrix<NodeId>& y) {
    auto keys = [](const DistanceMatrix<NodeId>& m) {
        std::vector<NodeId> out;
        out.reserve(m.size());
        for (const auto& [node, row] : m) out.push_back(node);
        return out;
    };
    const auto kx = keys(x);
    if (kx != keys(y)) throw ShapeError("min_plus_product: node sets differ");
    auto check_rows = [&](const DistanceMatrix<NodeId>& m) {
        for (const auto& [node, row] : m) {
            if (row.size() != kx.size()) throw ShapeError("min_plus_product: matrix is not square");
            std::size_t i = 0;
            for (const auto& [t, w] : row)
                if (t != kx[i++]) throw ShapeError("min_plus_product: matrix is not square");
        }
    };
    check_rows(x);
    check_rows(y);
}

} // namespace detail

/// Min-plus (tropical) matrix product: Z[i][j] = min over k of
/// X[i][k] + Y[k][j]; INF absorbs addition. Allocates a fresh result, so
/// squaring an operand in place is safe.
template <NodeKey NodeId>
DistanceMatrix<NodeId> min_plus_product(const DistanceMatrix<NodeId>& x,
                                        const DistanceMatrix<NodeId>& y) {
    detail::require_square_same_nodes(x, y);
    DistanceMatrix<NodeId> z;
    for (const auto& [i, xrow] : x) {
        auto& zrow = z[i];
        for (const auto& [j, unused] : xrow) zrow[j] = INF;
        for (const auto& [k, xik] : xrow) {
            if (xik == INF) continue;
            for (const auto& [j, ykj] : y.at(k)) {
                const double through = xik + ykj;
                auto& best = zrow[j];
                if (through < best) best = through;
            }
        }
    }
    return z;
}

/// All-pairs distances by repeated min-plus extension, O(V^4): the m-th
/// power of the weight matrix covers paths of at most m edges, and V-1
/// edges suffice for any shortest path free of negative cycles.
template <NodeKey NodeId>
DistanceMatrix<NodeId> slow_all_pairs(const Graph<NodeId>& g) {
    if (!g.is_directed()) throw WrongModeError("slow_all_pairs: graph is not directed");
    const auto w = weight_matrix(g);
    DistanceMatrix<NodeId> l = w;
    for (std::size_t m = 2; m + 1 <= g.v(); ++m) l = min_plus_product(l, w);
    return l;
}

/// Same result as slow_all_pairs in O(V^3 log V) by repeated squaring:
/// powers double until they reach V-1. When `product_count` is non-null it
/// receives the number of min-plus products performed,
/// ceil(log2(V-1)) for V >= 2.
template <NodeKey NodeId>
DistanceMatrix<NodeId> faster_all_pairs(const Graph<NodeId>& g,
                                        std::size_t* product_count = nullptr) {
    if (!g.is_directed()) throw WrongModeError("faster_all_pairs: graph is not directed");
    DistanceMatrix<NodeId> l = weight_matrix(g);
    std::size_t products = 0;
    for (std::size_t m = 1; m + 1 < g.v(); m *= 2) {
        l = min_plus_product(l, l);
        ++products;
    }
    if (product_count) *product_count = products;
    return l;
}

} // namespace wgraph

#endif // WGRAPH_ALL_PAIRS_HPP
