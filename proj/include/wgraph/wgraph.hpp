#ifndef WGRAPH_WGRAPH_HPP
#define WGRAPH_WGRAPH_HPP

#include "wgraph/all_pairs.hpp"
#include "wgraph/bench.hpp"
#include "wgraph/distance.hpp"
#include "wgraph/edge.hpp"
#include "wgraph/edge_list.hpp"
#include "wgraph/errors.hpp"
#include "wgraph/generate.hpp"
#include "wgraph/graph.hpp"
#include "wgraph/mst.hpp"
#include "wgraph/oracles.hpp"
#include "wgraph/shortest_paths.hpp"
#include "wgraph/topological_sort.hpp"
#include "wgraph/union_find.hpp"
#include "wgraph/verify.hpp"

#endif // WGRAPH_WGRAPH_HPP
