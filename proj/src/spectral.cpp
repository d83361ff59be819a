#include "walkrank/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "walkrank/error.hpp"
#include "walkrank/structure.hpp"

namespace walkrank {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

struct PowerResult {
    double lambda;
    std::vector<double> vector;
    std::size_t iterations;
    double residual;
    bool converged;
};

// Power iteration on A + I from the uniform vector.
PowerResult shifted_power(const Graph &g, Side side, double tol, std::size_t max_iter) {
    const std::size_t n = g.num_nodes();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(n), w(n);
    PowerResult r{0.0, v, 0, 0.0, false};
    for (std::size_t it = 0; it <= max_iter; ++it) {
        g.multiply(v, av, side);
        const double lambda = dot(v, av);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res += (av[i] - lambda * v[i]) * (av[i] - lambda * v[i]);
        res = std::sqrt(res);
        r = {lambda, v, it, res, false};
        if (res <= tol * std::abs(lambda) || res == 0.0) {
            r.converged = true;
            return r;
        }
        if (it == max_iter) break;
        for (std::size_t i = 0; i < n; ++i) w[i] = av[i] + v[i];
        const double scale = norm2(w);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / scale;
    }
    return r;
}

} // namespace

SpectralInfo dominant_eigenpair(const Graph &g, Side side, double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw DomainError("eigen tolerance must be positive");
    if (!is_connected(g))
        throw ValidationError(g.directed() ? "dominant_eigenpair requires a strongly connected graph"
                                           : "dominant_eigenpair requires a connected graph");
    auto r = shifted_power(g, side, tol, max_iter);
    if (!r.converged)
        throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter) +
                                   " iterations (residual " + std::to_string(r.residual) + ")",
                               std::move(r.vector), r.iterations, r.residual);
    SpectralInfo info;
    info.lambda1 = r.lambda;
    info.vector = std::move(r.vector);
    info.side = side;
    info.iterations = r.iterations;
    info.residual = r.residual;
    return info;
}

double spectral_radius(const Graph &g, double tol, std::size_t max_iter) {
    if (g.num_nodes() == 0 || g.num_edges() == 0) return 0.0;
    if (is_connected(g)) return dominant_eigenpair(g, Side::Broadcast, tol, max_iter).lambda1;
    // ρ(A) is the largest spectral radius over the diagonal blocks of the
    // Frobenius normal form, i.e. over the strong components.
    const auto comp = components(g);
    const std::size_t count = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<NodeId>> members(count);
    for (NodeId i = 0; i < g.num_nodes(); ++i) members[comp[i]].push_back(i);
    double rho = 0.0;
    for (auto &m : members) {
        if (m.size() == 1 && !g.has_edge(m[0], m[0])) continue;
        const auto sub = induced_subgraph(g, std::move(m));
        rho = std::max(rho, dominant_eigenpair(sub.graph, Side::Broadcast, tol, max_iter).lambda1);
    }
    return rho;
}

double second_eigenvalue(const Graph &g, const SpectralInfo &info, double tol, std::size_t max_iter) {
    if (g.directed()) throw UnsupportedError("second_eigenvalue is only defined for undirected graphs");
    const std::size_t n = g.num_nodes();
    if (n < 2) throw DomainError("second_eigenvalue needs at least 2 nodes");
    if (info.vector.size() != n) throw ValidationError("spectral info does not match graph");

    const auto &q = info.vector;
    const double shift = info.lambda1;
    auto deflate = [&q](std::vector<double> &x) {
        const double c = dot(q, x);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * q[i];
    };

    // Fixed pseudo-random start: the uniform vector is parallel to q₁ on regular graphs.
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(n);
    for (auto &xi : x) xi = dist(rng);
    deflate(x);
    double scale = norm2(x);
    for (auto &xi : x) xi /= scale;

    std::vector<double> ax(n), w(n);
    double mu = 0.0, res = 0.0;
    for (std::size_t it = 0; it <= max_iter; ++it) {
        g.multiply(x, ax);
        mu = dot(x, ax);
        res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res += (ax[i] - mu * x[i]) * (ax[i] - mu * x[i]);
        res = std::sqrt(res);
        if (res <= tol * info.lambda1) return mu;
        if (it == max_iter) break;
        for (std::size_t i = 0; i < n; ++i) w[i] = ax[i] + shift * x[i];
        deflate(w);
        scale = norm2(w);
        // Every non-Perron eigenvalue equals −λ₁ (e.g. K₂): the shifted operator vanishes.
        if (scale <= 1e-14 * info.lambda1) return mu;
        for (std::size_t i = 0; i < n; ++i) x[i] = w[i] / scale;
    }
    throw ConvergenceError("second eigenvalue iteration did not converge (residual " +
                               std::to_string(res) + ")",
                           std::move(x), max_iter, res);
}

SpectralInfo spectral_summary(const Graph &g, double tol, std::size_t max_iter) {
    if (g.directed()) throw UnsupportedError("spectral_summary is only defined for undirected graphs");
    // A tighter dominant pair keeps the deflation leak well below tol.
    auto info = dominant_eigenpair(g, Side::Broadcast, tol * 1e-2, max_iter);
    const double l2 = second_eigenvalue(g, info, tol, max_iter);
    info.lambda2 = l2;
    info.lambda2_abs = std::abs(l2);
    info.gap = info.lambda1 - l2;
    return info;
}

double spectral_gap(const Graph &g, double tol) { return *spectral_summary(g, tol).gap; }

} // namespace walkrank
