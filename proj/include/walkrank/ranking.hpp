#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkrank/graph.hpp"

namespace walkrank {

inline constexpr double kDefaultTieTol = 1e-9;

/// Nodes ordered by descending score.
struct Ranking {
    /// order[position] = node id.
    std::vector<NodeId> order;
    std::vector<double> scores;
    /// Half-open position ranges [first, second) partitioning 0..n; every
    /// range holds scores that chain together within tie_tol.
    std::vector<std::pair<std::size_t, std::size_t>> tie_groups;

    std::size_t size() const noexcept { return order.size(); }
};

/**
 * Sorts by score descending. Consecutive scores a, b with
 * |a − b| <= tie_tol·max(|a|, |b|) share a tie group, and each tie group is
 * ordered by ascending node id. tie_tol = 0 groups exact ties only.
 * Throws ValidationError on non-finite scores.
 */
Ranking rank(std::span<const double> scores, double tie_tol = kDefaultTieTol);

/// True when every tie group of `reference` holds the same node set in
/// `candidate` at the same positions. Order inside a reference group is free.
bool equal_modulo_ties(const Ranking &candidate, const Ranking &reference);

/**
 * isim_k(x, y) = (1/k) Σ_{i=1..k} |X_i Δ Y_i| / (2i), X_i and Y_i the top-i
 * node sets. 0 for identical top-k orderings, 1 for disjoint top-k sets.
 * k defaults to n. Throws ValidationError when the rankings cover different
 * node sets or k is outside [1, n].
 */
double intersection_distance(std::span<const NodeId> x, std::span<const NodeId> y,
                             std::optional<std::size_t> k = std::nullopt);
double intersection_distance(const Ranking &x, const Ranking &y,
                             std::optional<std::size_t> k = std::nullopt);

enum class Family { ExpSubgraph, TotalCommunicability, ResolventSubgraph, Katz, PageRank };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Resolvent families are parameterized by α = τ/λ₁; the others directly.
bool uses_normalized_alpha(Family f);

/// β ∈ {0.1, 0.5, 1, 2, 5, 8, 10} for exponential families;
/// α = τ/λ₁ with τ ∈ {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99} for
/// resolvent families; α ∈ {0.01, 0.1, 0.5, 0.85, 0.9, 0.99} for PageRank.
std::vector<double> default_grid(Family f, double lambda1);

struct SweepResult {
    Family family = Family::ExpSubgraph;
    Side side = Side::Broadcast;
    double lambda1 = 0.0;
    /// Parameter values as passed to the measure.
    std::vector<double> grid;
    /// τ = αλ₁ for resolvent families, identical to grid otherwise.
    std::vector<double> normalized_grid;
    std::vector<double> isim_to_degree;
    /// Empty entries when no eigenvector reference exists (PageRank on a
    /// graph that is not strongly connected).
    std::vector<std::optional<double>> isim_to_eigenvector;
    /// isim_successive[i] compares grid points i and i + 1.
    std::vector<double> isim_successive;
    std::size_t k = 0;
    bool k_is_all = true;
};

/**
 * Computes the family's measure at every grid point and compares its ranking
 * with the degree ranking (out-degree for Broadcast, in-degree for Receive,
 * H1 for PageRank) and the eigenvector ranking (q₁, x₁ or y₁; y₁ for
 * PageRank). Grid points are evaluated concurrently; the result does not
 * depend on evaluation order.
 * Throws DomainError when the grid is not strictly increasing or leaves the
 * feasible interval.
 */
SweepResult limit_sweep(const Graph &g, Family family, std::span<const double> grid,
                        std::optional<std::size_t> k = std::nullopt, Side side = Side::Broadcast,
                        double tie_tol = kDefaultTieTol);

struct ConvergenceReport {
    double threshold = 0.05;
    /// Fewer than two grid points.
    bool degenerate = false;
    /// [lo, hi] in normalized parameter units: the span of grid points whose
    /// rankings differ from both references by more than the threshold.
    std::optional<std::pair<double, double>> informative_band;
    /// Grid indices where isim to degree decreased.
    std::vector<std::size_t> degree_violations;
    /// Grid indices where isim to the eigenvector increased.
    std::vector<std::size_t> eigenvector_violations;
    std::string recommendation;
};

ConvergenceReport convergence_report(const SweepResult &s, double threshold = 0.05);

/// Columns: parameter, isim_degree, isim_eigenvector, isim_successive (the
/// last compares with the previous row and is empty on the first).
void write_csv(std::ostream &out, const SweepResult &s);
std::string to_json(const SweepResult &s, const ConvergenceReport *report = nullptr);

} // namespace walkrank
