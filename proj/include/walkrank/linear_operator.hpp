#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "walkrank/graph.hpp"

namespace walkrank {

/// Type-erased square matrix action y = M x with a cheap bound on ρ(M).
/// Series and power methods are written against this so they work on the
/// adjacency matrix, its transpose, and implicit operators such as the
/// Google matrix.
class LinearOperator {
public:
    using ApplyFn = std::function<void(std::span<const double>, std::span<double>)>;

    LinearOperator(std::size_t n, ApplyFn apply, double norm_bound)
        : n_(n), apply_(std::move(apply)), norm_bound_(norm_bound) {}

    /// A (Broadcast) or Aᵀ (Receive). Holds a reference: `g` must outlive the operator.
    static LinearOperator adjacency(const Graph &g, Side side = Side::Broadcast) {
        return LinearOperator(
            g.num_nodes(),
            [&g, side](std::span<const double> x, std::span<double> y) { g.multiply(x, y, side); },
            g.norm_bound());
    }

    std::size_t size() const noexcept { return n_; }
    void apply(std::span<const double> x, std::span<double> y) const { apply_(x, y); }
    /// Any bound with ρ(M) <= norm_bound().
    double norm_bound() const noexcept { return norm_bound_; }

private:
    std::size_t n_;
    ApplyFn apply_;
    double norm_bound_;
};

} // namespace walkrank
