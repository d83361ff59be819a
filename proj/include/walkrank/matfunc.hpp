#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "walkrank/graph.hpp"
#include "walkrank/linear_operator.hpp"

namespace walkrank {

enum class SeriesKind { Exponential, Resolvent, Custom };

/// Admissibility class of f(z) = Σ c_k z^k with every c_k > 0.
enum class SeriesClass {
    Entire,            ///< R_f = ∞
    DivergentAtRadius, ///< R_f < ∞ and Σ c_k R_f^k = ∞
    Positive,          ///< only c_k > 0 is known
};

/**
 * A power series with strictly positive coefficients and its radius of
 * convergence. Coefficient generators must be stateless index → value maps
 * so a SeriesFunction can be shared across threads.
 *
 * Terms are advanced through the ratio c_{k+1}/c_k rather than c_k itself,
 * which keeps 1/k! style coefficients from underflowing long before the
 * terms they scale do.
 */
class SeriesFunction {
public:
    using Generator = std::function<double(std::size_t)>;

    /// e^z: c_k = 1/k!, R = ∞.
    static SeriesFunction exponential();
    /// (1 − z)⁻¹: c_k = 1, R = 1.
    static SeriesFunction resolvent();
    /// User series. `ratio(k)` should return c_{k+1}/c_k; when omitted it is
    /// computed from `coefficient`. The divergence condition at R is declared
    /// by `tag`, not checked.
    static SeriesFunction custom(Generator coefficient, double radius, SeriesClass tag,
                                 Generator ratio = {});

    SeriesKind kind() const noexcept { return kind_; }
    double radius() const noexcept { return radius_; }
    SeriesClass class_tag() const noexcept { return tag_; }
    bool entire() const noexcept { return radius_ == std::numeric_limits<double>::infinity(); }

    double coefficient(std::size_t k) const;
    double ratio(std::size_t k) const;

    /// f(z) for real |z| < R.
    double evaluate(double z) const;
    /// f(z) − c₀ without cancellation for small z (expm1 for the exponential).
    double evaluate_shifted(double z) const;

private:
    SeriesKind kind_ = SeriesKind::Custom;
    double radius_ = 0.0;
    SeriesClass tag_ = SeriesClass::Positive;
    Generator coefficient_;
    Generator ratio_;
};

/// t* = R_f / λ₁, or ∞ when f is entire or λ₁ = 0.
double feasible_interval(const SeriesFunction &f, double lambda1);

inline constexpr double kDefaultSeriesTol = 1e-12;
inline constexpr std::size_t kDefaultMaxTerms = 5'000'000;

struct SeriesResult {
    std::vector<double> values;
    /// Terms (or Neumann sweeps) summed, over all scaling steps.
    std::size_t terms = 0;
};

/**
 * f(tM) v = Σ c_k t^k M^k v summed term by term with one mat-vec per term.
 * Summation stops once two consecutive terms satisfy ‖term‖₁ <= tol·‖sum‖₁.
 *
 * For finite R_f, `spectral_radius` is ρ(M); when omitted the operator's
 * norm bound is used, which may reject some feasible t. t = 0 returns c₀v.
 * Throws DomainError for t outside [0, t*) or on overflow, TruncationError
 * when `max_terms` is reached.
 */
SeriesResult apply_series(const SeriesFunction &f, double t, const LinearOperator &op,
                          std::span<const double> v, double tol = kDefaultSeriesTol,
                          std::optional<double> spectral_radius = std::nullopt,
                          std::size_t max_terms = kDefaultMaxTerms);

/// apply_series on A (Broadcast) or Aᵀ (Receive); ρ(A) is computed when needed.
SeriesResult apply_series(const SeriesFunction &f, double t, const Graph &g,
                          std::span<const double> v, double tol = kDefaultSeriesTol,
                          Side side = Side::Broadcast,
                          std::optional<double> spectral_radius = std::nullopt);

/**
 * e^{βM} v by scaling and repeated application: with s the smallest power of
 * two such that β·‖M‖/s <= 1, the Taylor series of e^{(β/s)M} is applied s
 * times. Deterministic for fixed inputs.
 */
SeriesResult exp_action(double beta, const LinearOperator &op, std::span<const double> v,
                        double tol = kDefaultSeriesTol);
SeriesResult exp_action(double beta, const Graph &g, std::span<const double> v,
                        double tol = kDefaultSeriesTol, Side side = Side::Broadcast);

/**
 * x = (I − αM)⁻¹ v via the Neumann iteration x ← v + αMx, stopping when
 * ‖x_{m+1} − x_m‖₁ <= tol·‖x_{m+1}‖₁. Requires 0 <= α < 1/ρ(M).
 */
SeriesResult resolvent_solve(double alpha, const LinearOperator &op, std::span<const double> v,
                             double spectral_radius, double tol = kDefaultSeriesTol,
                             std::size_t max_iter = kDefaultMaxTerms);
SeriesResult resolvent_solve(double alpha, const Graph &g, std::span<const double> v,
                             double tol = kDefaultSeriesTol, Side side = Side::Broadcast,
                             std::optional<double> spectral_radius = std::nullopt);

/// Largest n for which dense diagonal evaluation is attempted. 3000 unless the
/// CENTRALITY_DENSE_LIMIT environment variable holds a positive integer.
std::size_t dense_limit();

/**
 * diag(f(tA)) for undirected A from the dense eigendecomposition A = QΛQᵀ:
 * [f(tA)]_ii = Σ_k f(tλ_k) Q_ik².
 * Throws UnsupportedError for digraphs, CapacityError above dense_limit(),
 * DomainError for t outside [0, t*).
 */
std::vector<double> fA_diagonal(const SeriesFunction &f, double t, const Graph &g);

} // namespace walkrank
