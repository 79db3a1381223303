#ifndef WGRAPH_MST_HPP
#define WGRAPH_MST_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "wgraph/distance.hpp"
#include "wgraph/graph.hpp"
#include "wgraph/union_find.hpp"

namespace wgraph {

/// Minimum spanning forest in graph form: an acyclic undirected graph over
/// the same node set as the input, one tree per connected component.
template <NodeKey NodeId>
struct MstForest {
    Graph<NodeId> tree;
    double total_weight = 0.0;
};

/// Minimum spanning tree in parent-map form, rooted at `source` and spanning
/// only the source's component. `distance[t]` is the weight of the tree edge
/// (parent[t], t); nodes outside the component keep INF and a null parent.
template <NodeKey NodeId>
struct MstParentTree {
    std::optional<NodeId> source;
    ParentMap<NodeId> parent;
    DistanceMap<NodeId> distance;
    double total_weight = 0.0;
};

/// Boruvka's algorithm, O(E log V): every phase picks the cheapest edge
/// leaving each component and merges along the picks, so the component
/// count at least halves per phase. Repeated weights are fine because the
/// edge total order breaks ties consistently. Disconnected inputs yield a
/// forest.
template <NodeKey NodeId>
MstForest<NodeId> boruvka_mst(const Graph<NodeId>& g) {
    if (g.is_directed()) throw WrongModeError("boruvka_mst: graph is directed");

    MstForest<NodeId> result;
    UnionFind<NodeId> uf;
    for (const NodeId& node : g.nodes()) {
        uf.create(node);
        result.tree.add_node(node);
    }

    const auto all_edges = g.edges();
    while (true) {
        // Cheapest edge leaving each component, keyed by component root.
        // A root with no entry has no edge leaving its component.
        std::map<NodeId, Edge<NodeId>> cheapest;
        for (const auto& edge : all_edges) {
            NodeId rs = uf.find(edge.source);
            NodeId rt = uf.find(edge.target);
            if (rs == rt) continue;
            auto keep_min = [&](const NodeId& root) {
                auto [it, inserted] = cheapest.try_emplace(root, edge);
                if (!inserted && edge < it->second) it->second = edge;
            };
            keep_min(rs);
            keep_min(rt);
        }
        if (cheapest.empty()) break;

        std::size_t merges = 0;
        for (const auto& [root, edge] : cheapest) {
            if (uf.find(edge.source) == uf.find(edge.target)) continue;
            uf.merge(edge.source, edge.target);
            result.tree.add_edge(edge);
            result.total_weight += edge.weight;
            ++merges;
        }
        if (merges == 0) break;
    }
    return result;
}

/// Prim's algorithm with a binary-heap queue and lazy deletion, O(E log V).
/// Stale queue entries are skipped via the in-queue flag instead of a
/// decrease-key, so the queue can hold up to O(E) entries. Negative weights
/// are allowed. Spans only the source's component.
template <NodeKey NodeId>
MstParentTree<NodeId> prim_mst(const Graph<NodeId>& g,
                               std::optional<NodeId> source = std::nullopt) {
    if (g.is_directed()) throw WrongModeError("prim_mst: graph is directed");

    MstParentTree<NodeId> result;
    const auto nodes = g.nodes();
    if (!source) {
        if (nodes.empty()) return result;
        source = nodes.front();
    } else if (!g.has_node(*source)) {
        throw MissingNodeError("prim_mst: source not in graph");
    }
    result.source = source;

    std::map<NodeId, bool> in_queue;
    for (const NodeId& node : nodes) {
        result.distance[node] = INF;
        result.parent[node] = std::nullopt;
        in_queue[node] = true;
    }
    result.distance[*source] = 0.0;

    using QueueEntry = std::pair<double, NodeId>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> pq;
    for (const NodeId& node : nodes) pq.push({result.distance[node], node});

    while (!pq.empty()) {
        auto [dist, node] = pq.top();
        pq.pop();
        if (!in_queue[node]) continue;
        if (result.distance[node] == INF) break; // only other components remain
        in_queue[node] = false;
        for (const auto& [target, weight] : g.neighbors(node)) {
            if (in_queue[target] && weight < result.distance[target]) {
                result.distance[target] = weight;
                result.parent[target] = node;
                pq.push({weight, target});
            }
        }
    }

    for (const auto& [node, par] : result.parent)
        if (par) result.total_weight += result.distance[node];
    return result;
}

/// Prim's algorithm for dense graphs, O(V^2): |V| rounds, each selecting the
/// closest in-queue node by a linear scan. The scan and the relaxation both
/// walk the sorted node maps in lockstep, so a round costs O(V) steps.
/// Output is identical to prim_mst.
template <NodeKey NodeId>
MstParentTree<NodeId> prim_matrix_mst(const Graph<NodeId>& g,
                                      std::optional<NodeId> source = std::nullopt) {
    if (g.is_directed()) throw WrongModeError("prim_matrix_mst: graph is directed");

    MstParentTree<NodeId> result;
    const auto nodes = g.nodes();
    if (!source) {
        if (nodes.empty()) return result;
        source = nodes.front();
    } else if (!g.has_node(*source)) {
        throw MissingNodeError("prim_matrix_mst: source not in graph");
    }
    result.source = source;

    std::map<NodeId, char> in_queue;
    for (const NodeId& node : nodes) {
        result.distance.emplace_hint(result.distance.end(), node, INF);
        result.parent.emplace_hint(result.parent.end(), node, std::nullopt);
        in_queue.emplace_hint(in_queue.end(), node, 1);
    }
    auto& dist = result.distance;
    auto& parent = result.parent;
    dist.at(*source) = 0.0;

    for (std::size_t round = 0; round < nodes.size(); ++round) {
        auto best = dist.end();
        auto best_q = in_queue.end();
        auto qit = in_queue.begin();
        for (auto dit = dist.begin(); dit != dist.end(); ++dit, ++qit) {
            if (qit->second && (best == dist.end() || dit->second < best->second)) {
                best = dit;
                best_q = qit;
            }
        }
        if (best == dist.end() || best->second == INF) break; // only other components remain
        best_q->second = 0;
        auto dit = dist.begin();
        qit = in_queue.begin();
        auto pit = parent.begin();
        for (const auto& [target, weight] : g.neighbors(best->first)) {
            while (dit->first < target) {
                ++dit;
                ++qit;
                ++pit;
            }
            if (qit->second && weight < dit->second) {
                dit->second = weight;
                pit->second = best->first;
            }
        }
    }

    auto pit = parent.begin();
    for (auto dit = dist.begin(); dit != dist.end(); ++dit, ++pit)
        if (pit->second) result.total_weight += dit->second;
    return result;
}

/// Kruskal's algorithm, O(E log V): scan edges in ascending order and keep
/// the ones joining two different union-find components. Disconnected
/// inputs yield a forest.
template <NodeKey NodeId>
MstForest<NodeId> kruskal_mst(const Graph<NodeId>& g) {
    if (g.is_directed()) throw WrongModeError("kruskal_mst: graph is directed");

    MstForest<NodeId> result;
    UnionFind<NodeId> uf;
    for (const NodeId& node : g.nodes()) {
        uf.create(node);
        result.tree.add_node(node);
    }

    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (const auto& edge : edges) {
        if (uf.find(edge.source) != uf.find(edge.target)) {
            uf.merge(edge.source, edge.target);
            result.tree.add_edge(edge);
            result.total_weight += edge.weight;
        }
    }
    return result;
}

} // namespace wgraph

#endif // WGRAPH_MST_HPP
