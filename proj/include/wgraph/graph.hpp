#ifndef WGRAPH_GRAPH_HPP
#define WGRAPH_GRAPH_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "wgraph/edge.hpp"
#include "wgraph/errors.hpp"

namespace wgraph {

/// A simple weighted graph, directed or undirected, over ordered node
/// identifiers. Adjacency is a nested map node -> neighbor -> weight, so
/// edge lookup is logarithmic and iteration order is deterministic
/// (ascending by node).
///
/// Simple means no loops and no parallel edges. An undirected edge is kept
/// as both orientations with equal weight and counts as one edge.
///
/// Graph values are single-writer: concurrent reads are safe, mutation
/// needs exclusive access.
template <NodeKey NodeId>
class Graph {
public:
    using edge_type = Edge<NodeId>;
    using adjacency_row = std::map<NodeId, double>;

    /// The capacity hint `n` is accepted for interface compatibility and
    /// ignored by this adjacency-map representation.
    explicit Graph(std::size_t n = 0, bool directed = false) : directed_(directed) { (void)n; }

    [[nodiscard]] bool is_directed() const { return directed_; }

    /// Number of nodes.
    [[nodiscard]] std::size_t v() const { return adj_.size(); }

    /// Number of edges; an undirected edge counts once.
    [[nodiscard]] std::size_t e() const {
        std::size_t arcs = 0;
        for (const auto& [node, row] : adj_) arcs += row.size();
        return directed_ ? arcs : arcs / 2;
    }

    [[nodiscard]] bool has_node(const NodeId& s) const { return adj_.contains(s); }

    /// Adds an isolated node; a no-op when the node already exists.
    void add_node(const NodeId& s) { adj_.try_emplace(s); }

    /// Removes a node together with every incident edge.
    void del_node(const NodeId& s) {
        auto it = adj_.find(s);
        if (it == adj_.end()) throw MissingNodeError("del_node: node not in graph");
        adj_.erase(it);
        for (auto& [node, row] : adj_) row.erase(s);
    }

    /// Adds an edge; both endpoints are added as nodes when absent.
    void add_edge(const edge_type& e) {
        if (e.source == e.target) throw InvalidEdgeError("add_edge: loop edges are not allowed");
        if (has_edge(e)) throw DuplicateEdgeError("add_edge: edge already in graph");
        add_node(e.source);
        add_node(e.target);
        adj_[e.source][e.target] = e.weight;
        if (!directed_) adj_[e.target][e.source] = e.weight;
    }

    /// Removes an edge; on undirected graphs either representative is
    /// accepted and both stored orientations go away.
    void del_edge(const edge_type& e) {
        if (!has_edge(e)) throw MissingEdgeError("del_edge: edge not in graph");
        adj_[e.source].erase(e.target);
        if (!directed_) adj_[e.target].erase(e.source);
    }

    /// True when an arc source -> target is stored; the weight is ignored.
    [[nodiscard]] bool has_edge(const edge_type& e) const {
        auto it = adj_.find(e.source);
        return it != adj_.end() && it->second.contains(e.target);
    }

    /// Stored weight of the arc source -> target, or zero when absent.
    [[nodiscard]] double weight(const edge_type& e) const {
        auto it = adj_.find(e.source);
        if (it == adj_.end()) return 0.0;
        auto jt = it->second.find(e.target);
        return jt == it->second.end() ? 0.0 : jt->second;
    }

    /// All nodes in ascending order.
    [[nodiscard]] std::vector<NodeId> nodes() const {
        std::vector<NodeId> out;
        out.reserve(adj_.size());
        for (const auto& [node, row] : adj_) out.push_back(node);
        return out;
    }

    /// Every arc of a directed graph; one representative per undirected
    /// edge, oriented source < target.
    [[nodiscard]] std::vector<edge_type> edges() const {
        std::vector<edge_type> out;
        for (const auto& [s, row] : adj_)
            for (const auto& [t, w] : row)
                if (directed_ || s < t) out.push_back(edge_type{s, t, w});
        return out;
    }

    /// Arcs leaving `s`.
    [[nodiscard]] std::vector<edge_type> out_edges(const NodeId& s) const {
        const auto& row = checked_row(s, "out_edges");
        std::vector<edge_type> out;
        out.reserve(row.size());
        for (const auto& [t, w] : row) out.push_back(edge_type{s, t, w});
        return out;
    }

    /// Arcs entering `s`; a full adjacency scan.
    [[nodiscard]] std::vector<edge_type> in_edges(const NodeId& s) const {
        if (!has_node(s)) throw MissingNodeError("in_edges: node not in graph");
        std::vector<edge_type> out;
        for (const auto& [t, row] : adj_) {
            auto it = row.find(s);
            if (it != row.end()) out.push_back(edge_type{t, s, it->second});
        }
        return out;
    }

    /// Read-only neighbor -> weight row; no allocation.
    [[nodiscard]] const adjacency_row& neighbors(const NodeId& s) const {
        return checked_row(s, "neighbors");
    }

    /// Number of incident edges; undirected graphs only.
    [[nodiscard]] std::size_t degree(const NodeId& s) const {
        if (directed_) throw WrongModeError("degree: graph is directed, use in_degree/out_degree");
        return checked_row(s, "degree").size();
    }

    /// Number of outgoing arcs; directed graphs only.
    [[nodiscard]] std::size_t out_degree(const NodeId& s) const {
        if (!directed_) throw WrongModeError("out_degree: graph is undirected, use degree");
        return checked_row(s, "out_degree").size();
    }

    /// Number of incoming arcs; directed graphs only.
    [[nodiscard]] std::size_t in_degree(const NodeId& s) const {
        if (!directed_) throw WrongModeError("in_degree: graph is undirected, use degree");
        if (!has_node(s)) throw MissingNodeError("in_degree: node not in graph");
        std::size_t count = 0;
        for (const auto& [t, row] : adj_) count += row.contains(s) ? 1 : 0;
        return count;
    }

    /// Structural equality: same directedness, node set, and weighted arcs.
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    const adjacency_row& checked_row(const NodeId& s, const char* who) const {
        auto it = adj_.find(s);
        if (it == adj_.end()) throw MissingNodeError(std::string(who) + ": node not in graph");
        return it->second;
    }

    bool directed_;
    std::map<NodeId, adjacency_row> adj_;
};

/// Ordered sequence of nodes in which consecutive elements are joined by an
/// edge of the underlying graph.
template <NodeKey NodeId>
using Path = std::vector<NodeId>;

} // namespace wgraph

#endif // WGRAPH_GRAPH_HPP
