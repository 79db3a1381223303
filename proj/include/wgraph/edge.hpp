#ifndef WGRAPH_EDGE_HPP
#define WGRAPH_EDGE_HPP

#include <concepts>
#include <ostream>

namespace wgraph {

/// Requirements on node identifiers: equality, a strict total order, and
/// value semantics, so nodes can key ordered associative containers.
template <typename T>
concept NodeKey = std::regular<T> && std::totally_ordered<T>;

/// A directed weighted arc. Undirected graphs store an edge as the pair of
/// its two orientations; `reversed` produces the opposite orientation.
///
/// Edges are ordered by (weight, source, target), so any set of distinct
/// edges has a strict total order even when weights repeat. MST and
/// shortest-path tie-breaking relies on this.
template <NodeKey NodeId>
struct Edge {
    NodeId source{};
    NodeId target{};
    double weight = 1.0;

    [[nodiscard]] Edge reversed() const { return Edge{target, source, weight}; }

    friend bool operator==(const Edge&, const Edge&) = default;

    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.source != b.source) return a.source < b.source;
        return a.target < b.target;
    }
    friend bool operator>(const Edge& a, const Edge& b) { return b < a; }
    friend bool operator<=(const Edge& a, const Edge& b) { return !(b < a); }
    friend bool operator>=(const Edge& a, const Edge& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Edge& e) {
        return os << e.source << " -> " << e.target << " (" << e.weight << ")";
    }
};

} // namespace wgraph

#endif // WGRAPH_EDGE_HPP
