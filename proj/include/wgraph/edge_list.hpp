#ifndef WGRAPH_EDGE_LIST_HPP
#define WGRAPH_EDGE_LIST_HPP

#include <charconv>
#include <cstdlib>
#include <iterator>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "wgraph/graph.hpp"

namespace wgraph {

/// Formats a double so that parsing the text recovers the exact value.
inline std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

/// Parses a node label token. Strings pass through; integral node ids must
/// consume the whole token.
template <NodeKey NodeId>
NodeId parse_node_label(const std::string& token) {
    if constexpr (std::is_same_v<NodeId, std::string>) {
        return token;
    } else {
        static_assert(std::is_integral_v<NodeId>, "no label codec for this node id type");
        NodeId value{};
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw FormatError("bad node label '" + token + "'");
        return value;
    }
}

template <NodeKey NodeId>
std::string format_node_label(const NodeId& node) {
    if constexpr (std::is_same_v<NodeId, std::string>) {
        return node;
    } else {
        std::ostringstream os;
        os << node;
        return os.str();
    }
}

/// Writes the edge-list text format:
///   directed <0|1>
///   <source> <target> <weight>   one line per edge
///   node <label>                 one line per isolated node
/// Weights survive a round trip bit-exactly.
template <NodeKey NodeId>
void write_edge_list(std::ostream& os, const Graph<NodeId>& g) {
    os << "directed " << (g.is_directed() ? 1 : 0) << '\n';
    std::set<NodeId> touched;
    for (const auto& edge : g.edges()) {
        touched.insert(edge.source);
        touched.insert(edge.target);
        os << format_node_label(edge.source) << ' ' << format_node_label(edge.target) << ' '
           << format_weight(edge.weight) << '\n';
    }
    for (const NodeId& node : g.nodes())
        if (!touched.contains(node)) os << "node " << format_node_label(node) << '\n';
}

template <NodeKey NodeId>
std::string write_edge_list(const Graph<NodeId>& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

/// Parses the edge-list text format. Blank lines and lines starting with
/// '#' are ignored. Malformed lines raise FormatError naming the line;
/// loop and duplicate edges propagate the add_edge errors.
template <NodeKey NodeId>
Graph<NodeId> parse_edge_list(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    auto next_tokens = [&](std::vector<std::string>& tokens) {
        while (std::getline(is, line)) {
            ++line_no;
            std::istringstream ls(line);
            tokens.assign(std::istream_iterator<std::string>(ls),
                          std::istream_iterator<std::string>());
            if (tokens.empty() || tokens.front().starts_with('#')) continue;
            return true;
        }
        return false;
    };

    std::vector<std::string> tokens;
    if (!next_tokens(tokens)) throw FormatError("line 1: missing 'directed <0|1>' header");
    if (tokens.size() != 2 || tokens[0] != "directed" || (tokens[1] != "0" && tokens[1] != "1"))
        throw FormatError("line " + std::to_string(line_no) + ": expected 'directed <0|1>'");
    Graph<NodeId> g(0, tokens[1] == "1");

    while (next_tokens(tokens)) {
        if (tokens.size() == 2 && tokens[0] == "node") {
            g.add_node(parse_node_label<NodeId>(tokens[1]));
            continue;
        }
        if (tokens.size() != 3)
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected '<source> <target> <weight>' or 'node <label>'");
        const char* first = tokens[2].data();
        const char* last = first + tokens[2].size();
        char* end = nullptr;
        const double w = std::strtod(first, &end);
        if (end != last)
            throw FormatError("line " + std::to_string(line_no) + ": bad weight '" + tokens[2] + "'");
        g.add_edge(Edge<NodeId>{parse_node_label<NodeId>(tokens[0]),
                                parse_node_label<NodeId>(tokens[1]), w});
    }
    return g;
}

template <NodeKey NodeId>
Graph<NodeId> parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    return parse_edge_list<NodeId>(is);
}

} // namespace wgraph

#endif // WGRAPH_EDGE_LIST_HPP
