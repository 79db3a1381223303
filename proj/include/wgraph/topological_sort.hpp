#ifndef WGRAPH_TOPOLOGICAL_SORT_HPP
#define WGRAPH_TOPOLOGICAL_SORT_HPP

#include <map>
#include <set>
#include <vector>

#include "wgraph/graph.hpp"

namespace wgraph {

/// Topological order of a directed acyclic graph via Kahn's indegree-queue
/// method, O(V+E). Ready nodes are drained in ascending NodeId order, so the
/// output is deterministic. A non-empty residue after the drain means the
/// graph has a cycle.
template <NodeKey NodeId>
std::vector<NodeId> topological_sort(const Graph<NodeId>& g) {
    if (!g.is_directed()) throw WrongModeError("topological_sort: graph is not directed");

    std::map<NodeId, std::size_t> in_degree;
    for (const NodeId& node : g.nodes()) in_degree[node] = 0;
    for (const auto& edge : g.edges()) ++in_degree[edge.target];

    std::set<NodeId> ready;
    for (const auto& [node, deg] : in_degree)
        if (deg == 0) ready.insert(node);

    std::vector<NodeId> order;
    order.reserve(in_degree.size());
    while (!ready.empty()) {
        NodeId node = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(node);
        for (const auto& [next, w] : g.neighbors(node)) {
            if (--in_degree[next] == 0) ready.insert(next);
        }
    }

    if (order.size() != g.v()) throw CyclicGraphError("topological_sort: graph has a cycle");
    return order;
}

} // namespace wgraph

#endif // WGRAPH_TOPOLOGICAL_SORT_HPP
