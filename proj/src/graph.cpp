#include "walkrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "walkrank/error.hpp"

namespace walkrank {

namespace {

struct Triplet {
    NodeId row;
    NodeId col;
    double value;
};

// Rows sorted by column; assumes no duplicate (row, col).
std::vector<std::size_t> row_offsets(std::size_t n, std::span<const Triplet> entries) {
    std::vector<std::size_t> offsets(n + 1, 0);
    for (const auto &t : entries) ++offsets[t.row + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    return offsets;
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, GraphOptions options,
                        std::vector<std::int64_t> labels) {
    Graph g;
    g.n_ = n;
    g.options_ = options;

    std::map<std::pair<NodeId, NodeId>, double> merged;
    for (const auto &e : edges) {
        if (e.source >= n || e.target >= n)
            throw ValidationError("edge (" + std::to_string(e.source) + ", " +
                                  std::to_string(e.target) + ") out of range for n = " +
                                  std::to_string(n));
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw ValidationError("edge weights must be positive and finite, got " +
                                  std::to_string(e.weight));
        if (e.source == e.target && !options.allow_loops)
            throw ValidationError("loop at node " + std::to_string(e.source) +
                                  " but loops are not allowed");
        auto key = std::make_pair(e.source, e.target);
        if (!options.directed && key.first > key.second) std::swap(key.first, key.second);
        merged[key] += e.weight;
    }

    g.edges_.reserve(merged.size());
    for (const auto &[key, w] : merged) {
        g.edges_.push_back({key.first, key.second, w});
        if (w != 1.0) g.unweighted_ = false;
    }

    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int64_t>(i);
    } else if (labels.size() != n) {
        throw ValidationError("label count " + std::to_string(labels.size()) +
                              " does not match n = " + std::to_string(n));
    }
    g.labels_ = std::move(labels);

    std::vector<Triplet> forward;
    forward.reserve(2 * g.edges_.size());
    for (const auto &e : g.edges_) {
        forward.push_back({e.source, e.target, e.weight});
        if (!options.directed && e.source != e.target)
            forward.push_back({e.target, e.source, e.weight});
    }
    std::vector<Triplet> backward;
    backward.reserve(forward.size());
    for (const auto &t : forward) backward.push_back({t.col, t.row, t.value});

    auto build = [n](std::vector<Triplet> &entries) {
        std::sort(entries.begin(), entries.end(), [](const Triplet &a, const Triplet &b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        Csr c;
        c.offsets = row_offsets(n, entries);
        c.columns.reserve(entries.size());
        c.values.reserve(entries.size());
        for (const auto &t : entries) {
            c.columns.push_back(t.col);
            c.values.push_back(t.value);
        }
        return c;
    };
    g.out_ = build(forward);
    g.in_ = build(backward);

    double max_row = 0.0, max_col = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0, c = 0.0;
        for (std::size_t k = g.out_.offsets[i]; k < g.out_.offsets[i + 1]; ++k) r += g.out_.values[k];
        for (std::size_t k = g.in_.offsets[i]; k < g.in_.offsets[i + 1]; ++k) c += g.in_.values[k];
        max_row = std::max(max_row, r);
        max_col = std::max(max_col, c);
    }
    g.norm_bound_ = std::min(max_row, max_col);
    return g;
}

double Graph::weight(NodeId i, NodeId j) const {
    const auto cols = neighbors(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0.0;
    return out_.values[out_.offsets[i] + static_cast<std::size_t>(it - cols.begin())];
}

std::span<const NodeId> Graph::neighbors(NodeId i, Side side) const {
    const auto &c = csr(side);
    return {c.columns.data() + c.offsets[i], c.offsets[i + 1] - c.offsets[i]};
}

std::span<const double> Graph::weights(NodeId i, Side side) const {
    const auto &c = csr(side);
    return {c.values.data() + c.offsets[i], c.offsets[i + 1] - c.offsets[i]};
}

void Graph::multiply(std::span<const double> x, std::span<double> y, Side side) const {
    const auto &c = csr(side);
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (std::size_t k = c.offsets[i]; k < c.offsets[i + 1]; ++k)
            sum += c.values[k] * x[c.columns[k]];
        y[i] = sum;
    }
}

Graph Graph::transposed() const {
    if (!directed()) return *this;
    std::vector<Edge> reversed;
    reversed.reserve(edges_.size());
    for (const auto &e : edges_) reversed.push_back({e.target, e.source, e.weight});
    return from_edges(n_, reversed, options_, labels_);
}

} // namespace walkrank
