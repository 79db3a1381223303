#ifndef WGRAPH_UNION_FIND_HPP
#define WGRAPH_UNION_FIND_HPP

#include <cstddef>
#include <map>

#include "wgraph/edge.hpp"
#include "wgraph/errors.hpp"

namespace wgraph {

/// Disjoint-set forest with union by rank and path compression, giving
/// near-constant amortized cost per operation.
///
/// `find` compresses paths, so even lookups mutate internal state; sharing
/// an instance across threads requires exclusive access throughout.
template <NodeKey NodeId>
class UnionFind {
public:
    /// Makes `x` a singleton set.
    void create(const NodeId& x) {
        if (parent_.contains(x)) throw AlreadyPresentError("create: element already present");
        parent_.emplace(x, x);
        rank_.emplace(x, 0);
    }

    [[nodiscard]] bool contains(const NodeId& x) const { return parent_.contains(x); }

    /// Canonical representative of the set holding `x`.
    NodeId find(const NodeId& x) {
        auto it = parent_.find(x);
        if (it == parent_.end()) throw MissingElementError("find: element was never created");
        NodeId root = it->first;
        while (parent_.at(root) != root) root = parent_.at(root);
        // Path compression: repoint the chain at the root.
        NodeId walk = x;
        while (parent_.at(walk) != root) {
            NodeId next = parent_.at(walk);
            parent_.at(walk) = root;
            walk = next;
        }
        return root;
    }

    /// Merges the sets holding `x` and `y`; idempotent when already merged.
    void merge(const NodeId& x, const NodeId& y) {
        NodeId rx = find(x);
        NodeId ry = find(y);
        if (rx == ry) return;
        std::size_t& kx = rank_.at(rx);
        std::size_t& ky = rank_.at(ry);
        if (kx < ky) {
            parent_.at(rx) = ry;
        } else if (kx > ky) {
            parent_.at(ry) = rx;
        } else {
            parent_.at(ry) = rx;
            ++kx;
        }
    }

    /// Number of created elements.
    [[nodiscard]] std::size_t size() const { return parent_.size(); }

    /// Number of distinct roots, i.e. disjoint sets.
    [[nodiscard]] std::size_t set_count() const {
        std::size_t roots = 0;
        for (const auto& [x, p] : parent_)
            if (x == p) ++roots;
        return roots;
    }

private:
    std::map<NodeId, NodeId> parent_;
    std::map<NodeId, std::size_t> rank_;
};

} // namespace wgraph

#endif // WGRAPH_UNION_FIND_HPP
