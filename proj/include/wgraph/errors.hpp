#ifndef WGRAPH_ERRORS_HPP
#define WGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgraph {

/// Base class for every error raised by this library.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A loop edge (source == target) was passed where simple edges are required.
class InvalidEdgeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// The edge is already stored in the graph.
class DuplicateEdgeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// The node is not present in the graph.
class MissingNodeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// The edge is not present in the graph.
class MissingEdgeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A directed-only operation was called on an undirected graph, or vice versa.
class WrongModeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A cycle was found where an acyclic graph is required.
class CyclicGraphError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A negative-weight cycle makes the requested shortest paths undefined.
class NegativeCycleError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A negative edge weight was passed to an algorithm requiring non-negative weights.
class NegativeWeightError : public GraphError {
public:
    using GraphError::GraphError;
};

/// No path exists between the requested endpoints.
class NoPathError : public GraphError {
public:
    using GraphError::GraphError;
};

/// The element was already created in the disjoint-set forest.
class AlreadyPresentError : public GraphError {
public:
    using GraphError::GraphError;
};

/// The element was never created in the disjoint-set forest.
class MissingElementError : public GraphError {
public:
    using GraphError::GraphError;
};

/// Matrix operands do not share the same node set.
class ShapeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A text input could not be parsed; the message names the offending line.
class FormatError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A generator specification is out of range or inconsistent.
class InvalidSpecError : public GraphError {
public:
    using GraphError::GraphError;
};

/// The instance is too large for an exhaustive oracle.
class InstanceTooLargeError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A connected input was required.
class DisconnectedInputError : public GraphError {
public:
    using GraphError::GraphError;
};

/// No algorithm is registered under the requested name.
class UnknownAlgorithmError : public GraphError {
public:
    using GraphError::GraphError;
};

} // namespace wgraph

#endif // WGRAPH_ERRORS_HPP
