#include "walkrank/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "walkrank/error.hpp"

namespace walkrank::generators {

namespace {

void add_random_pairs(std::vector<Edge> &edges, std::size_t n, double p, bool directed,
                      std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = directed ? 0 : i + 1; j < n; ++j)
            if (i != j && coin(rng)) edges.push_back({i, j, 1.0});
}

// Overlay edges collapse to weight 1 instead of summing.
Graph simple_graph(std::size_t n, std::vector<Edge> edges, bool directed) {
    for (auto &e : edges)
        if (!directed && e.source > e.target) std::swap(e.source, e.target);
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge &a, const Edge &b) {
                                return a.source == b.source && a.target == b.target;
                            }),
                edges.end());
    return Graph::from_edges(n, edges, {directed, false});
}

} // namespace

Graph erdos_renyi(std::size_t n, double p, bool directed, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    add_random_pairs(edges, n, p, directed, rng);
    return simple_graph(n, std::move(edges), directed);
}

Graph ring(std::size_t n, bool directed) {
    if (n < 3) throw ValidationError("ring needs at least 3 nodes");
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % n), 1.0});
    return simple_graph(n, std::move(edges), directed);
}

Graph star(std::size_t n, bool directed) {
    if (n < 2) throw ValidationError("star needs at least 2 nodes");
    std::vector<Edge> edges;
    for (NodeId i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
    return simple_graph(n, std::move(edges), directed);
}

Graph random_connected(std::size_t n, double mean_degree, std::uint64_t seed) {
    if (n < 2) throw ValidationError("random_connected needs at least 2 nodes");
    std::mt19937_64 rng(seed);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < n; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        edges.push_back({order[pick(rng)], order[k], 1.0});
    }
    add_random_pairs(edges, n, mean_degree / static_cast<double>(n - 1), false, rng);
    return simple_graph(n, std::move(edges), false);
}

Graph random_strongly_connected(std::size_t n, double mean_out_degree, std::uint64_t seed) {
    if (n < 2) throw ValidationError("random_strongly_connected needs at least 2 nodes");
    std::mt19937_64 rng(seed);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < n; ++k) edges.push_back({order[k], order[(k + 1) % n], 1.0});
    add_random_pairs(edges, n, mean_out_degree / static_cast<double>(n - 1), true, rng);
    return simple_graph(n, std::move(edges), true);
}

} // namespace walkrank::generators
