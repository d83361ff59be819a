#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "walkrank/graph.hpp"

namespace support {

inline walkrank::Graph from_text_edges(std::size_t n, const std::vector<walkrank::Edge> &edges,
                                       bool directed = false) {
    walkrank::GraphOptions options;
    options.directed = directed;
    return walkrank::Graph::from_edges(n, edges, options);
}

inline walkrank::Graph path3() { return from_text_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

inline walkrank::Graph triangle() {
    return from_text_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

/// Same pattern with weights drawn from [lo, hi].
inline walkrank::Graph reweighted(const walkrank::Graph &g, std::uint64_t seed, double lo = 0.5,
                                  double hi = 2.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> w(lo, hi);
    std::vector<walkrank::Edge> edges(g.edges().begin(), g.edges().end());
    for (auto &e : edges) e.weight = w(rng);
    return walkrank::Graph::from_edges(g.num_nodes(), edges, g.options());
}

/// Relabels node i as perm[i].
inline walkrank::Graph permuted(const walkrank::Graph &g, const std::vector<walkrank::NodeId> &perm) {
    std::vector<walkrank::Edge> edges;
    for (const auto &e : g.edges()) edges.push_back({perm[e.source], perm[e.target], e.weight});
    return walkrank::Graph::from_edges(g.num_nodes(), edges, g.options());
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline double max_rel_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]) / std::max(std::abs(b[i]), 1e-300));
    return d;
}

} // namespace support
