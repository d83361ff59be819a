#pragma once

#include <cstdint>

#include "walkrank/graph.hpp"

namespace walkrank::generators {

/// G(n, p); every pair (ordered pair when directed) is an edge with probability p.
Graph erdos_renyi(std::size_t n, double p, bool directed, std::uint64_t seed);

/// Cycle 0 → 1 → … → n−1 → 0 (undirected when `directed` is false).
Graph ring(std::size_t n, bool directed);

/// Node 0 joined to nodes 1..n−1; directed edges point away from the center.
Graph star(std::size_t n, bool directed);

/// Connected undirected graph: a random spanning tree overlaid with G(n, p),
/// where p is chosen so the expected degree is about `mean_degree`.
Graph random_connected(std::size_t n, double mean_degree, std::uint64_t seed);

/// Strongly connected digraph: a random Hamiltonian cycle overlaid with a
/// directed G(n, p) of expected out-degree about `mean_out_degree`.
Graph random_strongly_connected(std::size_t n, double mean_out_degree, std::uint64_t seed);

} // namespace walkrank::generators
