#include "walkrank/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "walkrank/error.hpp"
#include "walkrank/matfunc.hpp"
#include "walkrank/structure.hpp"

namespace walkrank {

namespace {

double sum(std::span<const double> x) { return std::accumulate(x.begin(), x.end(), 0.0); }

} // namespace

double GoogleModel::h(NodeId i, NodeId j) const {
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k)
        if (columns_[k] == j) return values_[k];
    return 0.0;
}

void GoogleModel::apply_h(std::span<const double> x, std::span<double> y) const {
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) s += values_[k] * x[columns_[k]];
        y[i] = s;
    }
}

void GoogleModel::apply(std::span<const double> x, std::span<double> y) const {
    apply_h(x, y);
    double dangling_mass = 0.0;
    for (std::size_t i = 0; i < n_; ++i) dangling_mass += dangling_[i] * x[i];
    const double spread = alpha_ * dangling_mass / static_cast<double>(n_);
    const double teleport = (1.0 - alpha_) * sum(x);
    for (std::size_t i = 0; i < n_; ++i) y[i] = alpha_ * y[i] + spread + teleport * preference_[i];
}

LinearOperator GoogleModel::as_operator() const {
    return LinearOperator(
        n_, [this](std::span<const double> x, std::span<double> y) { apply(x, y); }, 1.0);
}

GoogleModel build_model(const Graph &g, double alpha, std::optional<std::vector<double>> preference) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw DomainError("damping factor alpha must lie in (0, 1), got " + std::to_string(alpha));
    if (alpha > kMaxDamping)
        throw DomainError("damping factor alpha = " + std::to_string(alpha) +
                          " is too close to 1 (limit 0.999); rankings degenerate there");
    const std::size_t n = g.num_nodes();
    if (n == 0) throw ValidationError("PageRank needs at least one node");

    GoogleModel m;
    m.n_ = n;
    m.alpha_ = alpha;
    if (preference) {
        if (preference->size() != n) throw ValidationError("preference length does not match graph");
        double total = 0.0;
        for (double x : *preference) {
            if (!(x >= 0.0) || !std::isfinite(x))
                throw ValidationError("preference entries must be nonnegative");
            total += x;
        }
        if (!(total > 0.0)) throw ValidationError("preference vector must have positive sum");
        m.preference_ = std::move(*preference);
        for (auto &x : m.preference_) x /= total;
    } else {
        m.preference_.assign(n, 1.0 / static_cast<double>(n));
    }

    const auto out_degree = degrees(g, Side::Broadcast);
    m.dangling_.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.dangling_[i] = out_degree[i] == 0.0 ? 1.0 : 0.0;

    // Row i of H = AᵀD⁻¹ holds a_ji / d_j over in-neighbors j.
    m.offsets_.assign(n + 1, 0);
    for (NodeId i = 0; i < n; ++i) {
        const auto src = g.neighbors(i, Side::Receive);
        const auto w = g.weights(i, Side::Receive);
        for (std::size_t k = 0; k < src.size(); ++k) {
            m.columns_.push_back(src[k]);
            m.values_.push_back(w[k] / out_degree[src[k]]);
        }
        m.offsets_[i + 1] = m.columns_.size();
    }
    return m;
}

PageRankResult pagerank_power(const GoogleModel &model, double tol, std::size_t max_iter) {
    const std::size_t n = model.size();
    PageRankResult r;
    r.p.assign(model.preference().begin(), model.preference().end());
    const double alpha = model.alpha();
    if (alpha == 0.0) return r;
    std::vector<double> next(n);
    double diff = 0.0;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        model.apply(r.p, next);
        const double total = sum(next);
        diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= total;
            diff += std::abs(next[i] - r.p[i]);
        }
        r.p.swap(next);
        r.iterations = it;
        if (alpha / (1.0 - alpha) * diff <= tol) return r;
    }
    throw ConvergenceError("PageRank power iteration did not converge", r.p, max_iter, diff);
}

PageRankResult pagerank_linear(const GoogleModel &model, double tol, std::size_t max_iter) {
    const std::size_t n = model.size();
    const auto v = model.preference();
    const double alpha = model.alpha();
    PageRankResult r;
    std::vector<double> x(v.begin(), v.end()), hx(n);
    double diff = 0.0, total = 0.0;
    for (std::size_t it = 1; alpha > 0.0; ++it) {
        model.apply_h(x, hx);
        diff = 0.0;
        total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double next = v[i] + alpha * hx[i];
            diff += std::abs(next - x[i]);
            total += next;
            x[i] = next;
        }
        r.iterations = it;
        // ‖x − x*‖₁ <= α/(1−α)·diff, and normalizing at most doubles the error.
        if (2.0 * alpha / (1.0 - alpha) * diff <= tol * total) break;
        if (it == max_iter)
            throw ConvergenceError("PageRank Neumann iteration did not converge", x, it, diff);
    }
    total = sum(x);
    for (auto &xi : x) xi /= total;
    r.p = std::move(x);
    return r;
}

std::vector<double> small_alpha_limit(const Graph &g) {
    const auto model = build_model(g, 0.5);
    std::vector<double> ones(g.num_nodes(), 1.0), out(g.num_nodes());
    model.apply_h(ones, out);
    return out;
}

std::vector<double> heat_kernel_rowsums(const GoogleModel &model, double t, double tol) {
    for (double x : model.preference())
        if (!(x > 0.0))
            throw ValidationError("heat kernel PageRank needs a strictly positive preference vector");
    if (!(t >= 0.0)) throw DomainError("heat kernel time t must be >= 0");
    const std::vector<double> ones(model.size(), 1.0);
    return exp_action(t, model.as_operator(), ones, tol).values;
}

} // namespace walkrank
