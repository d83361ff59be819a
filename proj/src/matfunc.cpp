#include "walkrank/matfunc.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "walkrank/error.hpp"
#include "walkrank/spectral.hpp"

namespace walkrank {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm1(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

void check_parameter(const SeriesFunction &f, double t, double rho) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("parameter must be a finite value >= 0, got " + format_double(t));
    if (f.entire() || t == 0.0) return;
    const double t_star = feasible_interval(f, rho);
    if (t >= t_star) {
        if (f.kind() == SeriesKind::Resolvent)
            throw DomainError("alpha must be < 1/lambda1 = " + format_double(t_star) + ", got " +
                              format_double(t));
        throw DomainError("t must be < t* = R_f/lambda1 = " + format_double(t_star) + ", got " +
                          format_double(t));
    }
}

void check_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v))
            throw DomainError("matrix function overflowed double precision; reduce the parameter");
}

} // namespace

SeriesFunction SeriesFunction::exponential() {
    SeriesFunction f;
    f.kind_ = SeriesKind::Exponential;
    f.radius_ = kInf;
    f.tag_ = SeriesClass::Entire;
    f.coefficient_ = [](std::size_t k) { return std::exp(-std::lgamma(static_cast<double>(k) + 1.0)); };
    f.ratio_ = [](std::size_t k) { return 1.0 / static_cast<double>(k + 1); };
    return f;
}

SeriesFunction SeriesFunction::resolvent() {
    SeriesFunction f;
    f.kind_ = SeriesKind::Resolvent;
    f.radius_ = 1.0;
    f.tag_ = SeriesClass::DivergentAtRadius;
    f.coefficient_ = [](std::size_t) { return 1.0; };
    f.ratio_ = [](std::size_t) { return 1.0; };
    return f;
}

SeriesFunction SeriesFunction::custom(Generator coefficient, double radius, SeriesClass tag,
                                      Generator ratio) {
    if (!coefficient) throw ValidationError("custom series needs a coefficient generator");
    if (!(radius > 0.0)) throw ValidationError("radius of convergence must be positive");
    if (tag == SeriesClass::Entire && radius != kInf)
        throw ValidationError("an entire series must have infinite radius");
    SeriesFunction f;
    f.kind_ = SeriesKind::Custom;
    f.radius_ = radius;
    f.tag_ = tag;
    f.coefficient_ = std::move(coefficient);
    f.ratio_ = ratio ? std::move(ratio) : Generator([c = f.coefficient_](std::size_t k) {
        return c(k + 1) / c(k);
    });
    return f;
}

double SeriesFunction::coefficient(std::size_t k) const {
    const double c = coefficient_(k);
    if (!(c > 0.0)) throw ValidationError("series coefficient c_" + std::to_string(k) + " is not positive");
    return c;
}

double SeriesFunction::ratio(std::size_t k) const {
    const double r = ratio_(k);
    if (!(r > 0.0) || !std::isfinite(r))
        throw ValidationError("series coefficient ratio c_" + std::to_string(k + 1) + "/c_" +
                              std::to_string(k) + " is not a positive number");
    return r;
}

double SeriesFunction::evaluate(double z) const { return coefficient(0) + evaluate_shifted(z); }

double SeriesFunction::evaluate_shifted(double z) const {
    switch (kind_) {
    case SeriesKind::Exponential:
        return std::expm1(z);
    case SeriesKind::Resolvent:
        if (z >= 1.0) throw DomainError("resolvent evaluated at z >= 1");
        return z / (1.0 - z);
    case SeriesKind::Custom:
        break;
    }
    if (std::abs(z) >= radius_) throw DomainError("series evaluated outside its radius of convergence");
    double term = coefficient(0);
    double sum = 0.0;
    int small = 0;
    for (std::size_t k = 0; k < kDefaultMaxTerms; ++k) {
        term *= ratio(k) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) || term == 0.0) {
            if (++small == 2) return sum;
        } else {
            small = 0;
        }
    }
    throw TruncationError("scalar series did not converge", std::abs(term / sum));
}

double feasible_interval(const SeriesFunction &f, double lambda1) {
    if (!(lambda1 >= 0.0)) throw DomainError("lambda1 must be positive");
    if (f.entire() || lambda1 == 0.0) return kInf;
    return f.radius() / lambda1;
}

SeriesResult apply_series(const SeriesFunction &f, double t, const LinearOperator &op,
                          std::span<const double> v, double tol,
                          std::optional<double> spectral_radius, std::size_t max_terms) {
    const std::size_t n = op.size();
    if (v.size() != n) throw ValidationError("vector length does not match operator size");
    if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
    check_parameter(f, t, spectral_radius.value_or(op.norm_bound()));

    const double c0 = f.coefficient(0);
    SeriesResult out;
    out.values.assign(v.begin(), v.end());
    for (auto &x : out.values) x *= c0;
    if (t == 0.0 || norm1(out.values) == 0.0) return out;

    std::vector<double> term = out.values, next(n);
    double sum_norm = norm1(out.values);
    int small = 0;
    for (std::size_t k = 0; k < max_terms; ++k) {
        op.apply(term, next);
        const double scale = f.ratio(k) * t;
        double term_norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            term[i] = scale * next[i];
            out.values[i] += term[i];
            term_norm += std::abs(term[i]);
        }
        sum_norm = norm1(out.values);
        out.terms = k + 1;
        if (!std::isfinite(sum_norm)) check_finite(out.values);
        if (term_norm <= tol * sum_norm) {
            if (++small == 2) return out;
        } else {
            small = 0;
        }
    }
    throw TruncationError("series did not reach tolerance within " + std::to_string(max_terms) +
                              " terms",
                          norm1(term) / sum_norm);
}

SeriesResult apply_series(const SeriesFunction &f, double t, const Graph &g,
                          std::span<const double> v, double tol, Side side,
                          std::optional<double> spectral_radius) {
    if (!spectral_radius && !f.entire() && t > 0.0) spectral_radius = walkrank::spectral_radius(g);
    return apply_series(f, t, LinearOperator::adjacency(g, side), v, tol, spectral_radius);
}

SeriesResult exp_action(double beta, const LinearOperator &op, std::span<const double> v,
                        double tol) {
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw DomainError("beta must be a finite value >= 0, got " + format_double(beta));
    const auto f = SeriesFunction::exponential();
    const double bound = op.norm_bound();
    std::size_t steps = 1;
    while (beta * bound / static_cast<double>(steps) > 1.0) steps *= 2;

    SeriesResult out;
    out.values.assign(v.begin(), v.end());
    const double t = beta / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        auto step = apply_series(f, t, op, out.values, tol);
        out.values = std::move(step.values);
        out.terms += step.terms;
    }
    check_finite(out.values);
    return out;
}

SeriesResult exp_action(double beta, const Graph &g, std::span<const double> v, double tol,
                        Side side) {
    return exp_action(beta, LinearOperator::adjacency(g, side), v, tol);
}

SeriesResult resolvent_solve(double alpha, const LinearOperator &op, std::span<const double> v,
                             double spectral_radius, double tol, std::size_t max_iter) {
    const std::size_t n = op.size();
    if (v.size() != n) throw ValidationError("vector length does not match operator size");
    if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
    check_parameter(SeriesFunction::resolvent(), alpha, spectral_radius);

    SeriesResult out;
    out.values.assign(v.begin(), v.end());
    if (alpha == 0.0) return out;
    std::vector<double> ax(n);
    double diff = 0.0, total = 0.0;
    for (std::size_t m = 0; m < max_iter; ++m) {
        op.apply(out.values, ax);
        diff = 0.0;
        total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = v[i] + alpha * ax[i];
            diff += std::abs(x - out.values[i]);
            total += std::abs(x);
            out.values[i] = x;
        }
        out.terms = m + 1;
        if (diff <= tol * total) {
            check_finite(out.values);
            return out;
        }
    }
    throw ConvergenceError("Neumann iteration did not converge in " + std::to_string(max_iter) +
                               " sweeps",
                           std::move(out.values), max_iter, diff / total);
}

SeriesResult resolvent_solve(double alpha, const Graph &g, std::span<const double> v, double tol,
                             Side side, std::optional<double> spectral_radius) {
    const double rho = spectral_radius ? *spectral_radius
                                       : (alpha == 0.0 ? 0.0 : walkrank::spectral_radius(g));
    return resolvent_solve(alpha, LinearOperator::adjacency(g, side), v, rho, tol);
}

std::size_t dense_limit() {
    if (const char *env = std::getenv("CENTRALITY_DENSE_LIMIT")) {
        char *end = nullptr;
        const long long value = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    return 3000;
}

std::vector<double> fA_diagonal(const SeriesFunction &f, double t, const Graph &g) {
    if (g.directed())
        throw UnsupportedError("diagonal measures do not separate broadcast and receive roles; "
                               "use total communicability or Katz on digraphs");
    const std::size_t n = g.num_nodes();
    if (n > dense_limit())
        throw CapacityError("n = " + std::to_string(n) + " exceeds the dense limit of " +
                            std::to_string(dense_limit()) +
                            "; use total communicability instead or raise CENTRALITY_DENSE_LIMIT");
    if (n == 0) return {};

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto &e : g.edges()) {
        a(e.source, e.target) = e.weight;
        a(e.target, e.source) = e.weight;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    if (eig.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", {}, 0, 0.0);
    const auto &lambda = eig.eigenvalues();
    const auto &q = eig.eigenvectors();
    const double rho = std::max(std::abs(lambda(0)), std::abs(lambda(static_cast<Eigen::Index>(n) - 1)));
    check_parameter(f, t, rho);

    const double c0 = f.coefficient(0);
    std::vector<double> shifted(n);
    for (std::size_t k = 0; k < n; ++k) shifted[k] = f.evaluate_shifted(t * lambda(static_cast<Eigen::Index>(k)));

    std::vector<double> diag(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double qik = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
            s += shifted[k] * qik * qik;
        }
        diag[i] = c0 + s;
    }
    check_finite(diag);
    return diag;
}

} // namespace walkrank
