#ifndef WGRAPH_ORACLES_HPP
#define WGRAPH_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <type_traits>
#include <map>
#include <queue>
#include <vector>

#include "wgraph/distance.hpp"
#include "wgraph/graph.hpp"

namespace wgraph {

/// Size caps for the exhaustive oracles below.
inline constexpr std::size_t kOracleMaxPathNodes = 12;
inline constexpr std::size_t kOracleMaxMstNodes = 8;

/// Breadth-first reachability over the adjacency rows, ignoring direction
/// semantics; for undirected graphs this is graph connectivity.
template <NodeKey NodeId>
bool is_connected(const Graph<NodeId>& g) {
    const auto nodes = g.nodes();
    if (nodes.size() <= 1) return true;
    std::set<NodeId> seen{nodes.front()};
    std::queue<NodeId> frontier;
    frontier.push(nodes.front());
    while (!frontier.empty()) {
        NodeId node = frontier.front();
        frontier.pop();
        for (const auto& [next, w] : g.neighbors(node))
            if (seen.insert(next).second) frontier.push(next);
    }
    return seen.size() == nodes.size();
}

/// Exhaustive shortest-path reference: depth-first enumeration of every
/// simple path leaving `source`, recording the cheapest arrival at each
/// node. No pruning, so negative weights are handled exactly; without
/// negative cycles some shortest path is simple, which makes the minimum
/// over simple paths the true distance. INF marks unreachable nodes.
template <NodeKey NodeId>
DistanceMap<NodeId> oracle_all_shortest_from(const Graph<NodeId>& g,
                                             const std::type_identity_t<NodeId>& source) {
    if (g.v() > kOracleMaxPathNodes)
        throw InstanceTooLargeError("oracle_all_shortest_from: too many nodes for enumeration");
    if (!g.has_node(source)) throw MissingNodeError("oracle_all_shortest_from: source not in graph");

    DistanceMap<NodeId> best;
    for (const NodeId& node : g.nodes()) best[node] = INF;
    best[source] = 0.0;

    std::set<NodeId> on_path{source};
    auto extend = [&](auto&& self, const NodeId& node, double cost) -> void {
        for (const auto& [next, w] : g.neighbors(node)) {
            if (on_path.contains(next)) continue;
            const double reached = cost + w;
            auto& record = best.at(next);
            if (reached < record) record = reached;
            on_path.insert(next);
            self(self, next, reached);
            on_path.erase(next);
        }
    };
    extend(extend, source, 0.0);
    return best;
}

/// Minimum weight over all simple paths from `source` to `target`; INF when
/// no path exists.
template <NodeKey NodeId>
double oracle_shortest_path(const Graph<NodeId>& g, const std::type_identity_t<NodeId>& source,
                            const std::type_identity_t<NodeId>& target) {
    if (!g.has_node(target)) throw MissingNodeError("oracle_shortest_path: target not in graph");
    return oracle_all_shortest_from(g, source).at(target);
}

/// Exhaustive minimum-spanning-tree reference: tries every edge subset of
/// size v-1 and keeps the cheapest one whose subgraph connects all nodes
/// (v-1 connecting edges cannot contain a cycle). Requires a connected
/// undirected input.
template <NodeKey NodeId>
double oracle_mst_weight(const Graph<NodeId>& g) {
    if (g.is_directed()) throw WrongModeError("oracle_mst_weight: graph is directed");
    if (g.v() > kOracleMaxMstNodes)
        throw InstanceTooLargeError("oracle_mst_weight: too many nodes for enumeration");
    if (!is_connected(g)) throw DisconnectedInputError("oracle_mst_weight: graph is disconnected");

    const std::size_t n = g.v();
    if (n <= 1) return 0.0;
    const auto edges = g.edges();
    const std::size_t need = n - 1;

    std::map<NodeId, std::size_t> index;
    {
        std::size_t i = 0;
        for (const NodeId& node : g.nodes()) index[node] = i++;
    }

    // Spanning check for one subset: breadth-first search over its edges.
    auto spans = [&](const std::vector<std::size_t>& chosen) {
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t ei : chosen) {
            const auto s = index.at(edges[ei].source);
            const auto t = index.at(edges[ei].target);
            adj[s].push_back(t);
            adj[t].push_back(s);
        }
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (auto v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        return reached == n;
    };

    double best = INF;
    std::vector<std::size_t> chosen(need);
    for (std::size_t i = 0; i < need; ++i) chosen[i] = i;
    if (need > edges.size()) throw DisconnectedInputError("oracle_mst_weight: too few edges to span");
    while (true) {
        if (spans(chosen)) {
            double total = 0.0;
            for (std::size_t ei : chosen) total += edges[ei].weight;
            best = std::min(best, total);
        }
        // Next combination in lexicographic order.
        std::size_t i = need;
        while (i > 0 && chosen[i - 1] == edges.size() - need + (i - 1)) --i;
        if (i == 0) break;
        ++chosen[i - 1];
        for (std::size_t j = i; j < need; ++j) chosen[j] = chosen[j - 1] + 1;
    }
    return best;
}

} // namespace wgraph

#endif // WGRAPH_ORACLES_HPP
