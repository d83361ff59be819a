#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace walkrank {

using NodeId = std::uint32_t;

struct Edge {
    NodeId source;
    NodeId target;
    double weight = 1.0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Which copy of the adjacency matrix an operation reads.
/// Broadcast = A (out-degrees, right eigenvectors, hubs);
/// Receive = Aᵀ (in-degrees, left eigenvectors, authorities).
enum class Side { Broadcast, Receive };

struct GraphOptions {
    bool directed = false;
    bool allow_loops = false;
};

/**
 * Immutable sparse weighted graph.
 *
 * Nodes are dense 0-based ids. Each node carries an external label (the id
 * used in input files). Edges are stored once in canonical order; for
 * undirected graphs the canonical edge has source <= target. Both the row
 * (out) and column (in) CSR views of the adjacency matrix are kept, so A·x
 * and Aᵀ·x are both a single pass. For undirected graphs the two views are
 * the same symmetric matrix.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph from raw edges. Duplicate pairs are merged by summing
    /// weights; undirected (u,v) and (v,u) are the same pair.
    /// Throws ValidationError on out-of-range ids, nonpositive or non-finite
    /// weights, and loops when `allow_loops` is unset.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, GraphOptions options = {},
                            std::vector<std::int64_t> labels = {});

    std::size_t num_nodes() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return options_.directed; }
    bool allows_loops() const noexcept { return options_.allow_loops; }
    GraphOptions options() const noexcept { return options_; }

    /// Canonical edge list.
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// a_ij; symmetric for undirected graphs. Zero when absent.
    double weight(NodeId i, NodeId j) const;
    bool has_edge(NodeId i, NodeId j) const { return weight(i, j) != 0.0; }

    /// True when every weight equals 1.
    bool unweighted() const noexcept { return unweighted_; }

    /// Row i of A (side Broadcast) or of Aᵀ (side Receive).
    std::span<const NodeId> neighbors(NodeId i, Side side = Side::Broadcast) const;
    std::span<const double> weights(NodeId i, Side side = Side::Broadcast) const;

    std::int64_t label(NodeId i) const { return labels_[i]; }
    std::span<const std::int64_t> labels() const noexcept { return labels_; }

    /// y = A x (Broadcast) or y = Aᵀ x (Receive).
    void multiply(std::span<const double> x, std::span<double> y,
                  Side side = Side::Broadcast) const;

    /// Upper bound on the spectral radius: min(‖A‖₁, ‖A‖∞).
    double norm_bound() const noexcept { return norm_bound_; }

    /// Graph with the same nodes and every edge reversed (Aᵀ).
    Graph transposed() const;

private:
    struct Csr {
        std::vector<std::size_t> offsets;
        std::vector<NodeId> columns;
        std::vector<double> values;
    };

    std::size_t n_ = 0;
    GraphOptions options_;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> labels_;
    Csr out_;
    Csr in_;
    bool unweighted_ = true;
    double norm_bound_ = 0.0;

    const Csr &csr(Side side) const { return side == Side::Broadcast ? out_ : in_; }
};

} // namespace walkrank
