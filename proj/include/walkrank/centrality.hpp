#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "walkrank/graph.hpp"
#include "walkrank/matfunc.hpp"
#include "walkrank/spectral.hpp"

namespace walkrank {

enum class Measure {
    Degree,
    Eigenvector,
    Katz,
    ResolventSubgraph,
    ExpSubgraph,
    TotalCommunicability,
    HitsHub,
    HitsAuthority,
    PageRank,
    HeatKernel,
};

std::string_view to_string(Measure m);
/// Accepts the names printed by to_string ("katz", "exp-subgraph", ...).
std::optional<Measure> parse_measure(std::string_view name);

/// Symmetric for undirected graphs, where both roles coincide.
enum class Orientation { Broadcast, Receive, Symmetric };

std::string_view to_string(Orientation o);

struct SolverMeta {
    double tol = 0.0;
    std::size_t iterations = 0;
    double residual = 0.0;
};

/// Per-node scores of one measure at one parameter value.
struct CentralityVector {
    Measure measure = Measure::Degree;
    Orientation side = Orientation::Symmetric;
    /// Exactly the value requested, never clamped.
    std::optional<double> parameter;
    /// Empty means the all-ones vector.
    std::optional<std::vector<double>> preference;
    std::vector<double> scores;
    SolverMeta meta;
};

inline constexpr double kDefaultBeta = 1.0;
inline constexpr double kDefaultTau = 0.85;

/// 0.85/λ₁ for the given graph.
double default_katz_alpha(const Graph &g);

CentralityVector degree_centrality(const Graph &g, Side side = Side::Broadcast);

/// Unit-2-norm Perron vector of A (Broadcast) or Aᵀ (Receive).
CentralityVector eigenvector_centrality(const Graph &g, Side side = Side::Broadcast,
                                        double tol = kDefaultEigenTol);

/// K(α) = (I − αA)⁻¹v (Broadcast) or (I − αAᵀ)⁻¹v (Receive); v defaults to 1.
/// `lambda1` skips the spectral radius computation when already known.
CentralityVector katz(const Graph &g, double alpha,
                      std::optional<std::vector<double>> preference = std::nullopt,
                      Side side = Side::Broadcast, double tol = kDefaultSeriesTol,
                      std::optional<double> lambda1 = std::nullopt);

/// RC(α) = diag((I − αA)⁻¹); undirected only.
CentralityVector resolvent_subgraph(const Graph &g, double alpha);

/// SC(β) = diag(e^{βA}); undirected only.
CentralityVector exp_subgraph(const Graph &g, double beta);

/// TC(β) = e^{βA}v (Broadcast) or e^{βAᵀ}v (Receive); v defaults to 1.
CentralityVector total_communicability(const Graph &g, double beta,
                                       std::optional<std::vector<double>> preference = std::nullopt,
                                       Side side = Side::Broadcast,
                                       double tol = kDefaultSeriesTol);

struct HitsScores {
    CentralityVector hub;
    CentralityVector authority;
};

/// Hub = dominant eigenvector of AAᵀ, authority = dominant eigenvector of AᵀA,
/// by alternating power iteration from the uniform vector with 2-norm
/// normalization. Stops when ‖AAᵀh − μh‖₂ <= tol·μ, μ the Rayleigh quotient.
HitsScores hits(const Graph &g, double tol = kDefaultEigenTol,
                std::size_t max_iter = kDefaultEigenMaxIter);

} // namespace walkrank
