#include "walkrank/centrality.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "walkrank/error.hpp"
#include "walkrank/structure.hpp"

namespace walkrank {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 10> kMeasureNames{{
    {Measure::Degree, "degree"},
    {Measure::Eigenvector, "eigenvector"},
    {Measure::Katz, "katz"},
    {Measure::ResolventSubgraph, "resolvent-subgraph"},
    {Measure::ExpSubgraph, "exp-subgraph"},
    {Measure::TotalCommunicability, "total-communicability"},
    {Measure::HitsHub, "hits-hub"},
    {Measure::HitsAuthority, "hits-authority"},
    {Measure::PageRank, "pagerank"},
    {Measure::HeatKernel, "heat-kernel"},
}};

Orientation orientation(const Graph &g, Side side) {
    if (!g.directed()) return Orientation::Symmetric;
    return side == Side::Broadcast ? Orientation::Broadcast : Orientation::Receive;
}

std::vector<double> resolve_preference(const Graph &g,
                                       const std::optional<std::vector<double>> &preference) {
    if (!preference) return std::vector<double>(g.num_nodes(), 1.0);
    if (preference->size() != g.num_nodes())
        throw ValidationError("preference vector has " + std::to_string(preference->size()) +
                              " entries, graph has " + std::to_string(g.num_nodes()) + " nodes");
    for (double x : *preference)
        if (!(x > 0.0) || !std::isfinite(x))
            throw ValidationError("preference vector entries must be positive");
    return *preference;
}

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

} // namespace

std::string_view to_string(Measure m) {
    for (const auto &[measure, name] : kMeasureNames)
        if (measure == m) return name;
    return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
    for (const auto &[measure, label] : kMeasureNames)
        if (label == name) return measure;
    return std::nullopt;
}

std::string_view to_string(Orientation o) {
    switch (o) {
    case Orientation::Broadcast: return "broadcast";
    case Orientation::Receive: return "receive";
    case Orientation::Symmetric: return "symmetric";
    }
    return "unknown";
}

double default_katz_alpha(const Graph &g) {
    const double rho = spectral_radius(g);
    if (rho == 0.0) throw DomainError("graph has no edges; Katz parameter is unbounded");
    return kDefaultTau / rho;
}

CentralityVector degree_centrality(const Graph &g, Side side) {
    CentralityVector c;
    c.measure = Measure::Degree;
    c.side = orientation(g, side);
    c.scores = degrees(g, side);
    return c;
}

CentralityVector eigenvector_centrality(const Graph &g, Side side, double tol) {
    auto info = dominant_eigenpair(g, side, tol);
    CentralityVector c;
    c.measure = Measure::Eigenvector;
    c.side = orientation(g, side);
    c.scores = std::move(info.vector);
    c.meta = {tol, info.iterations, info.residual};
    return c;
}

CentralityVector katz(const Graph &g, double alpha, std::optional<std::vector<double>> preference,
                      Side side, double tol, std::optional<double> lambda1) {
    const auto v = resolve_preference(g, preference);
    auto r = resolvent_solve(alpha, g, v, tol, side, lambda1);
    CentralityVector c;
    c.measure = Measure::Katz;
    c.side = orientation(g, side);
    c.parameter = alpha;
    c.preference = std::move(preference);
    c.scores = std::move(r.values);
    c.meta = {tol, r.terms, 0.0};
    return c;
}

CentralityVector resolvent_subgraph(const Graph &g, double alpha) {
    CentralityVector c;
    c.measure = Measure::ResolventSubgraph;
    c.side = Orientation::Symmetric;
    c.parameter = alpha;
    c.scores = fA_diagonal(SeriesFunction::resolvent(), alpha, g);
    return c;
}

CentralityVector exp_subgraph(const Graph &g, double beta) {
    if (!(beta >= 0.0)) throw DomainError("beta must be >= 0");
    CentralityVector c;
    c.measure = Measure::ExpSubgraph;
    c.side = Orientation::Symmetric;
    c.parameter = beta;
    c.scores = fA_diagonal(SeriesFunction::exponential(), beta, g);
    return c;
}

CentralityVector total_communicability(const Graph &g, double beta,
                                       std::optional<std::vector<double>> preference, Side side,
                                       double tol) {
    const auto v = resolve_preference(g, preference);
    auto r = exp_action(beta, g, v, tol, side);
    CentralityVector c;
    c.measure = Measure::TotalCommunicability;
    c.side = orientation(g, side);
    c.parameter = beta;
    c.preference = std::move(preference);
    c.scores = std::move(r.values);
    c.meta = {tol, r.terms, 0.0};
    return c;
}

HitsScores hits(const Graph &g, double tol, std::size_t max_iter) {
    const std::size_t n = g.num_nodes();
    if (n == 0 || g.num_edges() == 0) throw ValidationError("hits requires a graph with edges");
    std::vector<double> h(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> a(n), y(n);
    double mu = 0.0, res = 0.0;
    std::size_t it = 0;
    for (;; ++it) {
        g.multiply(h, a, Side::Receive); // a = Aᵀh
        mu = dot(a, a);                  // hᵀAAᵀh
        g.multiply(a, y, Side::Broadcast);
        res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res += (y[i] - mu * h[i]) * (y[i] - mu * h[i]);
        res = std::sqrt(res);
        if (res <= tol * mu) break;
        if (it == max_iter)
            throw ConvergenceError("HITS did not converge in " + std::to_string(max_iter) +
                                       " iterations",
                                   h, it, res);
        const double scale = std::sqrt(dot(y, y));
        for (std::size_t i = 0; i < n; ++i) h[i] = y[i] / scale;
    }
    const double a_norm = std::sqrt(mu);
    for (auto &x : a) x /= a_norm;

    HitsScores out;
    out.hub.measure = Measure::HitsHub;
    out.hub.side = g.directed() ? Orientation::Broadcast : Orientation::Symmetric;
    out.hub.scores = std::move(h);
    out.hub.meta = {tol, it, res};
    out.authority.measure = Measure::HitsAuthority;
    out.authority.side = g.directed() ? Orientation::Receive : Orientation::Symmetric;
    out.authority.scores = std::move(a);
    out.authority.meta = {tol, it, res};
    return out;
}

} // namespace walkrank
