#pragma once

#include <optional>
#include <vector>

#include "walkrank/graph.hpp"

namespace walkrank {

/// Weighted degrees: row sums of A (Broadcast / out) or column sums (Receive / in).
std::vector<double> degrees(const Graph &g, Side side = Side::Broadcast);

/// Component id per node (0-based, numbered in order of each component's
/// smallest node). Strongly connected components for digraphs, connected
/// components otherwise.
std::vector<std::size_t> components(const Graph &g);

/// True when the graph has one (strongly) connected component. False for n = 0.
bool is_connected(const Graph &g);

struct Subgraph {
    Graph graph;
    /// original_ids[new_id] = node id in the source graph.
    std::vector<NodeId> original_ids;
};

/// Induced subgraph on the given nodes (sorted ascending); labels are carried over.
Subgraph induced_subgraph(const Graph &g, std::vector<NodeId> nodes);

/// Induced subgraph on the largest strongly connected component (largest
/// connected component for undirected graphs). Ties go to the component
/// holding the smallest node id. Throws ValidationError on an empty graph.
Subgraph largest_scc(const Graph &g);

/// Δ_i = ½[A³]_ii. Weighted graphs give the weighted closed 3-walk value.
/// Throws UnsupportedError on directed graphs.
std::vector<double> triangle_counts(const Graph &g);

struct Clustering {
    /// CC(i) = 2Δ_i / (d_i(d_i − 1)); empty for nodes with d_i < 2.
    std::vector<std::optional<double>> per_node;
    /// Mean over nodes with d_i >= 2; empty when there are none.
    std::optional<double> average;
};

/// Clustering coefficients on the unweighted, loop-free structure of g.
/// Throws UnsupportedError on directed graphs.
Clustering clustering_coefficient(const Graph &g);

} // namespace walkrank
