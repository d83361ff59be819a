#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "walkrank/graph.hpp"
#include "walkrank/linear_operator.hpp"

namespace walkrank {

inline constexpr double kDefaultDamping = 0.85;
inline constexpr double kDefaultPageRankTol = 1e-10;
/// Damping factors above this are rejected; the ranking degenerates as α → 1.
inline constexpr double kMaxDamping = 0.999;

/**
 * Google matrix P = αS + (1 − α)v1ᵀ with S = H + (1/n)1aᵀ and H = AᵀD⁻¹,
 * kept implicit: only H is stored (sparse), and P x is applied as
 * αHx + (α/n)(aᵀx)1 + (1 − α)(1ᵀx)v.
 */
class GoogleModel {
public:
    std::size_t size() const noexcept { return n_; }
    double alpha() const noexcept { return alpha_; }
    /// Probability vector v.
    std::span<const double> preference() const noexcept { return preference_; }
    /// a_i = 1 exactly when node i has out-degree 0.
    std::span<const double> dangling() const noexcept { return dangling_; }

    /// H_ij.
    double h(NodeId i, NodeId j) const;
    void apply_h(std::span<const double> x, std::span<double> y) const;
    /// y = P x.
    void apply(std::span<const double> x, std::span<double> y) const;
    /// P as a LinearOperator (norm bound 1). References *this.
    LinearOperator as_operator() const;

private:
    friend GoogleModel build_model(const Graph &, double, std::optional<std::vector<double>>);

    std::size_t n_ = 0;
    double alpha_ = 0.0;
    std::vector<double> preference_;
    std::vector<double> dangling_;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> columns_;
    std::vector<double> values_;
};

/// Undirected graphs are treated as bidirected. A custom preference must be
/// nonnegative with positive sum and is normalized to sum 1. α = 0 is
/// accepted as the trivial boundary (P = v1ᵀ).
/// Throws DomainError for α outside [0, kMaxDamping].
GoogleModel build_model(const Graph &g, double alpha = kDefaultDamping,
                        std::optional<std::vector<double>> preference = std::nullopt);

struct PageRankResult {
    std::vector<double> p;
    std::size_t iterations = 0;
};

/// p ← P p from p₀ = v. P contracts zero-sum vectors by α in the 1-norm, so
/// iteration stops once α/(1 − α)·‖p_{k+1} − p_k‖₁ <= tol, which bounds the
/// distance to the stationary vector by tol.
PageRankResult pagerank_power(const GoogleModel &model, double tol = kDefaultPageRankTol,
                              std::size_t max_iter = 1'000'000);

/// Neumann iteration x ← v + αHx for (I − αH)x = v, then p = x/(1ᵀx).
/// Stops once the same a-posteriori bound guarantees ‖p − p*‖₁ <= tol.
PageRankResult pagerank_linear(const GoogleModel &model, double tol = kDefaultPageRankTol,
                               std::size_t max_iter = 1'000'000);

/// H1, the row sums of H: the α → 0⁺ ranking limit for uniform v.
std::vector<double> small_alpha_limit(const Graph &g);

/// e^{tP}1 (unscaled; divide by e^t for a stochastic vector). Requires v > 0.
std::vector<double> heat_kernel_rowsums(const GoogleModel &model, double t, double tol = 1e-12);

} // namespace walkrank
