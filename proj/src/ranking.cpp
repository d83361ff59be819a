#include "walkrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "walkrank/centrality.hpp"
#include "walkrank/error.hpp"
#include "walkrank/pagerank.hpp"
#include "walkrank/spectral.hpp"
#include "walkrank/structure.hpp"

namespace walkrank {

Ranking rank(std::span<const double> scores, double tie_tol) {
    const std::size_t n = scores.size();
    for (double s : scores)
        if (!std::isfinite(s)) throw ValidationError("cannot rank non-finite scores");
    Ranking r;
    r.scores.assign(scores.begin(), scores.end());
    r.order.resize(n);
    std::iota(r.order.begin(), r.order.end(), NodeId{0});
    std::stable_sort(r.order.begin(), r.order.end(),
                     [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });

    std::size_t start = 0;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        bool split = pos == n;
        if (!split) {
            const double a = scores[r.order[pos - 1]], b = scores[r.order[pos]];
            split = std::abs(a - b) > tie_tol * std::max(std::abs(a), std::abs(b));
        }
        if (split && n > 0) {
            std::sort(r.order.begin() + static_cast<std::ptrdiff_t>(start),
                      r.order.begin() + static_cast<std::ptrdiff_t>(pos));
            r.tie_groups.emplace_back(start, pos);
            start = pos;
        }
    }
    return r;
}

bool equal_modulo_ties(const Ranking &candidate, const Ranking &reference) {
    if (candidate.size() != reference.size()) return false;
    for (const auto &[first, last] : reference.tie_groups) {
        std::vector<NodeId> a(candidate.order.begin() + static_cast<std::ptrdiff_t>(first),
                              candidate.order.begin() + static_cast<std::ptrdiff_t>(last));
        std::vector<NodeId> b(reference.order.begin() + static_cast<std::ptrdiff_t>(first),
                              reference.order.begin() + static_cast<std::ptrdiff_t>(last));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

double intersection_distance(std::span<const NodeId> x, std::span<const NodeId> y,
                             std::optional<std::size_t> k) {
    const std::size_t n = x.size();
    if (y.size() != n) throw ValidationError("rankings have different lengths");
    {
        std::vector<NodeId> a(x.begin(), x.end()), b(y.begin(), y.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw ValidationError("rankings cover different node sets");
    }
    const std::size_t depth = k.value_or(n);
    if (depth < 1 || depth > n)
        throw ValidationError("k must lie in [1, " + std::to_string(n) + "], got " +
                              std::to_string(depth));

    const NodeId max_id = n ? *std::max_element(x.begin(), x.end()) : 0;
    std::vector<char> in_x(max_id + 1, 0), in_y(max_id + 1, 0);
    std::size_t common = 0;
    double total = 0.0;
    for (std::size_t i = 1; i <= depth; ++i) {
        const NodeId a = x[i - 1], b = y[i - 1];
        in_x[a] = 1;
        if (in_y[a]) ++common;
        in_y[b] = 1;
        if (in_x[b]) ++common;
        // |X_i Δ Y_i| = 2(i − |X_i ∩ Y_i|)
        total += static_cast<double>(i - common) / static_cast<double>(i);
    }
    return total / static_cast<double>(depth);
}

double intersection_distance(const Ranking &x, const Ranking &y, std::optional<std::size_t> k) {
    return intersection_distance(x.order, y.order, k);
}

std::string_view to_string(Family f) {
    switch (f) {
    case Family::ExpSubgraph: return "exp-subgraph";
    case Family::TotalCommunicability: return "total-communicability";
    case Family::ResolventSubgraph: return "resolvent-subgraph";
    case Family::Katz: return "katz";
    case Family::PageRank: return "pagerank";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (auto f : {Family::ExpSubgraph, Family::TotalCommunicability, Family::ResolventSubgraph,
                   Family::Katz, Family::PageRank})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

bool uses_normalized_alpha(Family f) {
    return f == Family::ResolventSubgraph || f == Family::Katz;
}

std::vector<double> default_grid(Family f, double lambda1) {
    switch (f) {
    case Family::ExpSubgraph:
    case Family::TotalCommunicability:
        return {0.1, 0.5, 1.0, 2.0, 5.0, 8.0, 10.0};
    case Family::ResolventSubgraph:
    case Family::Katz: {
        std::vector<double> grid;
        for (double tau : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99}) grid.push_back(tau / lambda1);
        return grid;
    }
    case Family::PageRank:
        return {0.01, 0.1, 0.5, 0.85, 0.9, 0.99};
    }
    return {};
}

SweepResult limit_sweep(const Graph &g, Family family, std::span<const double> grid,
                        std::optional<std::size_t> k, Side side, double tie_tol) {
    if (grid.empty()) throw DomainError("sweep grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("sweep grid must be strictly increasing");
    if (!g.directed()) side = Side::Broadcast;

    SweepResult s;
    s.family = family;
    s.side = side;
    s.grid.assign(grid.begin(), grid.end());
    s.k = k.value_or(g.num_nodes());
    s.k_is_all = !k || *k == g.num_nodes();

    // References.
    std::optional<Ranking> eigen_ref;
    if (family != Family::PageRank || is_connected(g)) {
        const Side eig_side = family == Family::PageRank ? Side::Receive : side;
        const auto info = dominant_eigenpair(g, eig_side);
        s.lambda1 = info.lambda1;
        eigen_ref = rank(info.vector, tie_tol);
    } else {
        s.lambda1 = spectral_radius(g);
    }
    const Ranking degree_ref = rank(
        family == Family::PageRank ? small_alpha_limit(g) : degrees(g, side), tie_tol);

    for (double p : grid) {
        if (!(p > 0.0)) throw DomainError("sweep parameters must be positive");
        if (uses_normalized_alpha(family) && p * s.lambda1 >= 1.0)
            throw DomainError("alpha must be < t* = 1/lambda1 = " + std::to_string(1.0 / s.lambda1) +
                              ", got " + std::to_string(p));
        if (family == Family::PageRank && p > kMaxDamping)
            throw DomainError("PageRank damping must be <= 0.999, got " + std::to_string(p));
        s.normalized_grid.push_back(uses_normalized_alpha(family) ? p * s.lambda1 : p);
    }

    auto evaluate = [&g, family, side, lambda1 = s.lambda1](double p) -> std::vector<double> {
        switch (family) {
        case Family::ExpSubgraph: return exp_subgraph(g, p).scores;
        case Family::TotalCommunicability:
            return total_communicability(g, p, std::nullopt, side).scores;
        case Family::ResolventSubgraph: return resolvent_subgraph(g, p).scores;
        case Family::Katz:
            return katz(g, p, std::nullopt, side, kDefaultSeriesTol, lambda1).scores;
        case Family::PageRank: return pagerank_power(build_model(g, p)).p;
        }
        return {};
    };
    std::vector<std::future<std::vector<double>>> pending;
    for (double p : grid) pending.push_back(std::async(std::launch::async, evaluate, p));

    std::vector<Ranking> ranks;
    for (auto &f : pending) ranks.push_back(rank(f.get(), tie_tol));
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        s.isim_to_degree.push_back(intersection_distance(ranks[i], degree_ref, s.k));
        if (eigen_ref)
            s.isim_to_eigenvector.emplace_back(intersection_distance(ranks[i], *eigen_ref, s.k));
        else
            s.isim_to_eigenvector.emplace_back();
        if (i > 0) s.isim_successive.push_back(intersection_distance(ranks[i - 1], ranks[i], s.k));
    }
    return s;
}

ConvergenceReport convergence_report(const SweepResult &s, double threshold) {
    ConvergenceReport r;
    r.threshold = threshold;
    const std::size_t m = s.grid.size();
    const std::string name = uses_normalized_alpha(s.family) ? "tau = alpha*lambda1"
                             : s.family == Family::PageRank ? "alpha"
                                                            : "beta";
    constexpr double slack = 1e-12;
    for (std::size_t i = 1; i < m; ++i) {
        if (s.isim_to_degree[i] < s.isim_to_degree[i - 1] - slack) r.degree_violations.push_back(i);
        const auto &a = s.isim_to_eigenvector[i - 1];
        const auto &b = s.isim_to_eigenvector[i];
        if (a && b && *b > *a + slack) r.eigenvector_violations.push_back(i);
    }
    if (m < 2) {
        r.degenerate = true;
        r.recommendation = "single grid point: no band can be identified";
        return r;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const bool far_from_degree = s.isim_to_degree[i] > threshold;
        const bool far_from_eigen = !s.isim_to_eigenvector[i] || *s.isim_to_eigenvector[i] > threshold;
        if (far_from_degree && far_from_eigen) {
            const double p = s.normalized_grid[i];
            if (!r.informative_band) r.informative_band = std::make_pair(p, p);
            r.informative_band->first = std::min(r.informative_band->first, p);
            r.informative_band->second = std::max(r.informative_band->second, p);
        }
    }

    std::ostringstream msg;
    if (r.informative_band) {
        msg << "choose " << name << " in [" << r.informative_band->first << ", "
            << r.informative_band->second << "]; smaller values reproduce the degree ranking and "
            << "larger values the eigenvector ranking (isim threshold " << threshold << ")";
    } else {
        msg << "no grid point differs from both degree and eigenvector rankings by more than "
            << threshold << "; the cheaper reference measures suffice on this graph";
    }
    if (!r.degree_violations.empty() || !r.eigenvector_violations.empty())
        msg << "; convergence is not monotone at " << r.degree_violations.size() + r.eigenvector_violations.size()
            << " grid point(s)";
    r.recommendation = msg.str();
    return r;
}

void write_csv(std::ostream &out, const SweepResult &s) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(12);
    out << "parameter,isim_degree,isim_eigenvector,isim_successive\n";
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        out << s.grid[i] << ',' << s.isim_to_degree[i] << ',';
        if (s.isim_to_eigenvector[i]) out << *s.isim_to_eigenvector[i];
        out << ',';
        if (i > 0) out << s.isim_successive[i - 1];
        out << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

std::string to_json(const SweepResult &s, const ConvergenceReport *report) {
    nlohmann::json j;
    j["family"] = std::string(to_string(s.family));
    j["side"] = s.side == Side::Broadcast ? "broadcast" : "receive";
    j["lambda1"] = s.lambda1;
    j["k"] = s.k_is_all ? nlohmann::json("all") : nlohmann::json(s.k);
    j["grid"] = s.grid;
    j["normalized_grid"] = s.normalized_grid;
    j["isim_degree"] = s.isim_to_degree;
    auto eig = nlohmann::json::array();
    for (const auto &e : s.isim_to_eigenvector) eig.push_back(e ? nlohmann::json(*e) : nlohmann::json());
    j["isim_eigenvector"] = eig;
    j["isim_successive"] = s.isim_successive;
    if (report) {
        nlohmann::json r;
        r["threshold"] = report->threshold;
        r["degenerate"] = report->degenerate;
        if (report->informative_band)
            r["informative_band"] = {report->informative_band->first, report->informative_band->second};
        else
            r["informative_band"] = nullptr;
        r["degree_violations"] = report->degree_violations;
        r["eigenvector_violations"] = report->eigenvector_violations;
        r["recommendation"] = report->recommendation;
        j["report"] = r;
    }
    return j.dump(2);
}

} // namespace walkrank
