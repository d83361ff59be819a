#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "walkrank/graph.hpp"

namespace walkrank {

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr std::size_t kDefaultEigenMaxIter = 100'000;

/// Dominant (Perron) eigen-information of an adjacency matrix.
struct SpectralInfo {
    double lambda1 = 0.0;
    /// Perron vector, 2-norm 1, nonnegative (strictly positive when connected).
    std::vector<double> vector;
    /// Broadcast = right eigenvector of A (x₁ / q₁); Receive = left (y₁).
    Side side = Side::Broadcast;
    /// Signed second-largest eigenvalue, filled by spectral_summary().
    std::optional<double> lambda2;
    std::optional<double> lambda2_abs;
    /// lambda1 − lambda2 (signed λ₂).
    std::optional<double> gap;
    std::size_t iterations = 0;
    /// ‖A v − λ₁ v‖₂ at exit.
    double residual = 0.0;
};

/// Power iteration on A + I (or Aᵀ + I for Receive) from the uniform vector.
/// The unit shift makes the Perron root strictly dominant for every
/// irreducible nonnegative A, bipartite graphs included.
/// Stops when ‖A v − λ v‖₂ <= tol·λ with λ the Rayleigh quotient.
/// Throws ValidationError when g is not (strongly) connected and
/// ConvergenceError (with the last iterate) after max_iter steps.
SpectralInfo dominant_eigenpair(const Graph &g, Side side = Side::Broadcast,
                                double tol = kDefaultEigenTol,
                                std::size_t max_iter = kDefaultEigenMaxIter);

/// Spectral radius of A for any graph, connected or not (0 for no edges).
double spectral_radius(const Graph &g, double tol = kDefaultEigenTol,
                       std::size_t max_iter = kDefaultEigenMaxIter);

/// Signed λ₂ of an undirected graph, given its converged dominant pair.
/// Power iteration on (A + λ₁I) with q₁ projected out each step; the result
/// is the Rayleigh quotient of the converged vector.
/// Throws UnsupportedError for digraphs.
double second_eigenvalue(const Graph &g, const SpectralInfo &info, double tol = kDefaultEigenTol,
                         std::size_t max_iter = kDefaultEigenMaxIter);

/// dominant_eigenpair plus λ₂, |λ₂| and the gap (undirected graphs).
SpectralInfo spectral_summary(const Graph &g, double tol = kDefaultEigenTol,
                              std::size_t max_iter = kDefaultEigenMaxIter);

/// λ₁ − λ₂ for a connected undirected graph.
double spectral_gap(const Graph &g, double tol = kDefaultEigenTol);

} // namespace walkrank
