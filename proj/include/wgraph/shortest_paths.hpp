#ifndef WGRAPH_SHORTEST_PATHS_HPP
#define WGRAPH_SHORTEST_PATHS_HPP

#include <cstddef>
#include <type_traits>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "wgraph/distance.hpp"
#include "wgraph/graph.hpp"
#include "wgraph/topological_sort.hpp"

namespace wgraph {

/// Shortest-path tree from a single source: distance estimates plus parent
/// links. Unreachable nodes keep INF and a null parent.
template <NodeKey NodeId>
struct SsspResult {
    NodeId source{};
    DistanceMap<NodeId> distance;
    ParentMap<NodeId> parent;
};

/// Relaxation step: replace the distance overestimate of e.target when the
/// path through e.source is shorter. Entries missing from `dist` count as
/// INF, and INF + w = INF never improves anything, so relaxing from an
/// unreachable source is a no-op.
template <NodeKey NodeId>
bool relax(DistanceMap<NodeId>& dist, ParentMap<NodeId>& parent, const Edge<NodeId>& e) {
    auto source_it = dist.find(e.source);
    const double through = (source_it == dist.end() ? INF : source_it->second) + e.weight;
    auto [target_it, inserted] = dist.try_emplace(e.target, INF);
    if (through < target_it->second) {
        target_it->second = through;
        parent[e.target] = e.source;
        return true;
    }
    return false;
}

/// Bellman-Ford, O(V*E): up to |V|-1 full relaxation passes over the edge
/// list, then a verification pass that raises on any edge that still
/// relaxes, which happens iff a negative cycle is reachable from the
/// source. A pass with no successful relaxation ends the sweep early.
/// Negative edge weights are allowed.
template <NodeKey NodeId>
SsspResult<NodeId> bellman_ford(const Graph<NodeId>& g, const std::type_identity_t<NodeId>& source) {
    if (!g.is_directed()) throw WrongModeError("bellman_ford: graph is not directed");
    if (!g.has_node(source)) throw MissingNodeError("bellman_ford: source not in graph");

    SsspResult<NodeId> result;
    result.source = source;
    for (const NodeId& node : g.nodes()) {
        result.distance[node] = INF;
        result.parent[node] = std::nullopt;
    }
    result.distance[source] = 0.0;

    const auto edges = g.edges();
    const std::size_t passes = g.v() == 0 ? 0 : g.v() - 1;
    for (std::size_t pass = 0; pass < passes; ++pass) {
        bool changed = false;
        for (const auto& edge : edges)
            changed = relax(result.distance, result.parent, edge) || changed;
        if (!changed) break;
    }
    for (const auto& edge : edges) {
        if (result.distance.at(edge.target) > result.distance.at(edge.source) + edge.weight)
            throw NegativeCycleError("bellman_ford: negative cycle");
    }
    return result;
}

/// Dijkstra with a binary-heap queue and lazy deletion, O(E log V). All
/// edge weights must be non-negative; this is validated up front with one
/// O(E) scan because a silent wrong answer is worse than the scan.
///
/// `on_settle` fires with (node, distance) each time a node's distance
/// becomes permanent; the finite distances arrive in non-decreasing order.
template <NodeKey NodeId, typename SettleObserver>
SsspResult<NodeId> dijkstra(const Graph<NodeId>& g, const std::type_identity_t<NodeId>& source,
                            SettleObserver&& on_settle) {
    if (!g.is_directed()) throw WrongModeError("dijkstra: graph is not directed");
    if (!g.has_node(source)) throw MissingNodeError("dijkstra: source not in graph");
    for (const auto& edge : g.edges())
        if (edge.weight < 0) throw NegativeWeightError("dijkstra: negative edge weight");

    SsspResult<NodeId> result;
    result.source = source;
    std::map<NodeId, bool> in_queue;
    for (const NodeId& node : g.nodes()) {
        result.distance[node] = INF;
        result.parent[node] = std::nullopt;
        in_queue[node] = true;
    }
    result.distance[source] = 0.0;

    using QueueEntry = std::pair<double, NodeId>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> pq;
    pq.push({0.0, source});

    while (!pq.empty()) {
        auto [dist, node] = pq.top();
        pq.pop();
        if (!in_queue[node]) continue;
        in_queue[node] = false;
        on_settle(node, dist);
        for (const auto& [target, weight] : g.neighbors(node)) {
            if (in_queue[target] &&
                relax(result.distance, result.parent, Edge<NodeId>{node, target, weight})) {
                pq.push({result.distance[target], target});
            }
        }
    }
    return result;
}

template <NodeKey NodeId>
SsspResult<NodeId> dijkstra(const Graph<NodeId>& g, const std::type_identity_t<NodeId>& source) {
    return dijkstra(g, source, [](const NodeId&, double) {});
}

/// Dijkstra for dense graphs, O(V^2): |V| rounds, each settling the closest
/// in-queue node found by a linear scan. The scan and the relaxation walk
/// the sorted node maps in lockstep, so a round costs O(V) steps. Output is
/// identical to dijkstra. `on_settle` as in dijkstra.
template <NodeKey NodeId, typename SettleObserver>
SsspResult<NodeId> dijkstra_matrix(const Graph<NodeId>& g,
                                   const std::type_identity_t<NodeId>& source,
                                   SettleObserver&& on_settle) {
    if (!g.is_directed()) throw WrongModeError("dijkstra_matrix: graph is not directed");
    if (!g.has_node(source)) throw MissingNodeError("dijkstra_matrix: source not in graph");
    for (const auto& edge : g.edges())
        if (edge.weight < 0) throw NegativeWeightError("dijkstra_matrix: negative edge weight");

    SsspResult<NodeId> result;
    result.source = source;
    std::map<NodeId, char> in_queue;
    for (const NodeId& node : g.nodes()) {
        result.distance.emplace_hint(result.distance.end(), node, INF);
        result.parent.emplace_hint(result.parent.end(), node, std::nullopt);
        in_queue.emplace_hint(in_queue.end(), node, 1);
    }
    auto& dist = result.distance;
    auto& parent = result.parent;
    dist.at(source) = 0.0;

    const std::size_t n = in_queue.size();
    for (std::size_t round = 0; round < n; ++round) {
        auto best = dist.end();
        auto best_q = in_queue.end();
        auto qit = in_queue.begin();
        for (auto dit = dist.begin(); dit != dist.end(); ++dit, ++qit) {
            if (qit->second && (best == dist.end() || dit->second < best->second)) {
                best = dit;
                best_q = qit;
            }
        }
        if (best == dist.end() || best->second == INF) break; // the rest is unreachable
        best_q->second = 0;
        on_settle(best->first, best->second);
        auto dit = dist.begin();
        qit = in_queue.begin();
        auto pit = parent.begin();
        for (const auto& [target, weight] : g.neighbors(best->first)) {
            while (dit->first < target) {
                ++dit;
                ++qit;
                ++pit;
            }
            const double through = best->second + weight;
            if (qit->second && through < dit->second) {
                dit->second = through;
                pit->second = best->first;
            }
        }
    }
    return result;
}

template <NodeKey NodeId>
SsspResult<NodeId> dijkstra_matrix(const Graph<NodeId>& g,
                                   const std::type_identity_t<NodeId>& source) {
    return dijkstra_matrix(g, source, [](const NodeId&, double) {});
}

/// Shortest paths on a DAG, O(V+E): relax each node's out-edges once, in
/// topological order. Negative weights are allowed; a cyclic input
/// surfaces as the topological sort's cyclic-graph error.
template <NodeKey NodeId>
SsspResult<NodeId> dag_shortest_path(const Graph<NodeId>& g,
                                     const std::type_identity_t<NodeId>& source) {
    if (!g.is_directed()) throw WrongModeError("dag_shortest_path: graph is not directed");
    if (!g.has_node(source)) throw MissingNodeError("dag_shortest_path: source not in graph");
    const auto order = topological_sort(g);

    SsspResult<NodeId> result;
    result.source = source;
    for (const NodeId& node : g.nodes()) {
        result.distance[node] = INF;
        result.parent[node] = std::nullopt;
    }
    result.distance[source] = 0.0;

    for (const NodeId& node : order)
        for (const auto& [target, weight] : g.neighbors(node))
            relax(result.distance, result.parent, Edge<NodeId>{node, target, weight});
    return result;
}

/// Walks parent links back from `target` and returns the node sequence from
/// the source to `target`. Iterative, with a step counter capped at the
/// node count to catch corrupted parent maps.
template <NodeKey NodeId>
Path<NodeId> reconstruct_path(const SsspResult<NodeId>& r, const std::type_identity_t<NodeId>& target) {
    if (!r.parent.contains(target)) throw MissingNodeError("reconstruct_path: target not in result");
    Path<NodeId> path{target};
    NodeId walk = target;
    std::size_t steps = 0;
    while (walk != r.source) {
        const auto& par = r.parent.at(walk);
        if (!par) throw NoPathError("reconstruct_path: no path to target");
        if (++steps > r.parent.size()) throw GraphError("reconstruct_path: parent map has a cycle");
        walk = *par;
        path.push_back(walk);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace wgraph

#endif // WGRAPH_SHORTEST_PATHS_HPP
