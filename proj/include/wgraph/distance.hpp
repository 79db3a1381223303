#ifndef WGRAPH_DISTANCE_HPP
#define WGRAPH_DISTANCE_HPP

#include <limits>
#include <map>
#include <optional>

#include "wgraph/edge.hpp"

namespace wgraph {

/// Sentinel for "unreachable". IEEE rules make it absorbing under addition,
/// so relaxation from an unreachable node never fires.
inline constexpr double INF = std::numeric_limits<double>::infinity();

/// Per-node shortest-path (or tree-edge) weight estimates.
template <NodeKey NodeId>
using DistanceMap = std::map<NodeId, double>;

/// Rooted tree or forest as node -> parent links; roots map to nullopt.
template <NodeKey NodeId>
using ParentMap = std::map<NodeId, std::optional<NodeId>>;

/// Per-pair distances; diagonal 0, absent pairs INF.
template <NodeKey NodeId>
using DistanceMatrix = std::map<NodeId, DistanceMap<NodeId>>;

/// parent[s][t] = predecessor of t on a shortest s -> t path.
template <NodeKey NodeId>
using ParentMatrix = std::map<NodeId, ParentMap<NodeId>>;

} // namespace wgraph

#endif // WGRAPH_DISTANCE_HPP
