#pragma once

#include "walkrank/graph.hpp"

namespace walkrank::fixtures {

/// Zachary's karate club: 34 nodes, 78 undirected edges, labels 1..34.
Graph karate_club();

/// Six-node digraph used to illustrate small-damping PageRank, labels 1..6.
/// Node 2 is dangling.
Graph six_node_digraph();

} // namespace walkrank::fixtures
