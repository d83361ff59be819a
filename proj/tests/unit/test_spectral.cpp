#include <doctest.h>

#include <cmath>

#include "oracle/dense.hpp"
#include "oracle/general.hpp"
#include "support.hpp"
#include "walkrank/error.hpp"
#include "walkrank/fixtures.hpp"
#include "walkrank/generators.hpp"
#include "walkrank/spectral.hpp"

using namespace walkrank;

namespace {

double norm2(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double residual(const Graph &g, const SpectralInfo &info) {
    std::vector<double> y(g.num_nodes());
    g.multiply(info.vector, y, info.side);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= info.lambda1 * info.vector[i];
    return norm2(y);
}

} // namespace

TEST_SUITE("spectral") {
    TEST_CASE("path P3 against its characteristic polynomial") {
        // det(λI − A) = λ³ − 2λ, so λ₁ = √2 with eigenvector (1, √2, 1)/2.
        const auto info = dominant_eigenpair(support::path3());
        CHECK(info.lambda1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
        CHECK(info.vector[0] == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(info.vector[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
        CHECK(info.vector[2] == doctest::Approx(0.5).epsilon(1e-9));
    }

    TEST_CASE("triangle K3") {
        const auto info = dominant_eigenpair(support::triangle());
        CHECK(info.lambda1 == doctest::Approx(2.0).epsilon(1e-12));
        for (double x : info.vector) CHECK(x == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
        CHECK(second_eigenvalue(support::triangle(), info) == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(spectral_gap(support::triangle()) == doctest::Approx(3.0).epsilon(1e-8));
    }

    TEST_CASE("P3 gap uses the signed second eigenvalue") {
        // Spectrum {√2, 0, −√2}.
        CHECK(spectral_gap(support::path3()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
        const auto s = spectral_summary(support::path3());
        CHECK(std::abs(*s.lambda2) < 1e-8);
    }

    TEST_CASE("karate club spectrum") {
        const auto s = spectral_summary(fixtures::karate_club());
        CHECK(std::abs(s.lambda1 - 6.726) <= 1e-3);
        CHECK(std::abs(*s.lambda2 - 4.977) <= 1e-3);
        CHECK(std::abs(*s.gap - 1.749) <= 2e-3);
        CHECK(*s.lambda2_abs <= s.lambda1);
        const auto e = oracle::jacobi(oracle::adjacency(fixtures::karate_club()));
        CHECK(s.lambda1 == doctest::Approx(static_cast<double>(e.values.back())).epsilon(1e-10));
        CHECK(*s.lambda2 == doctest::Approx(static_cast<double>(e.values[e.values.size() - 2])).epsilon(1e-8));
    }

    TEST_CASE("bipartite graphs converge thanks to the unit shift") {
        for (std::size_t n : {4u, 6u, 10u, 20u}) {
            const Graph cycle = generators::ring(n, false);
            const auto info = dominant_eigenpair(cycle);
            CHECK(info.lambda1 == doctest::Approx(2.0).epsilon(1e-10));
            CHECK(info.residual <= 1e-10 * info.lambda1);
        }
        const auto star = dominant_eigenpair(generators::star(5, false));
        CHECK(star.lambda1 == doctest::Approx(2.0).epsilon(1e-10));
    }

    TEST_CASE("errors") {
        const Graph split = support::from_text_edges(4, {{0, 1, 1}, {2, 3, 1}});
        CHECK_THROWS_AS(dominant_eigenpair(split), ValidationError);
        const Graph path = support::from_text_edges(3, {{0, 1, 1}, {1, 2, 1}}, true);
        CHECK_THROWS_AS(dominant_eigenpair(path), ValidationError);
        const Graph cycle = generators::ring(5, true);
        CHECK_THROWS_AS(second_eigenvalue(cycle, dominant_eigenpair(cycle)), UnsupportedError);
        CHECK_THROWS_AS(dominant_eigenpair(fixtures::karate_club(), Side::Broadcast, 1e-14, 3), ConvergenceError);
        try {
            dominant_eigenpair(fixtures::karate_club(), Side::Broadcast, 1e-14, 3);
        } catch (const ConvergenceError &e) {
            CHECK(e.best_iterate().size() == 34);
            CHECK(e.iterations() == 3);
        }
    }

    TEST_CASE("spectral radius of disconnected graphs") {
        const Graph g = support::from_text_edges(5, {{0, 1, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
        CHECK(spectral_radius(g) == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(spectral_radius(support::from_text_edges(3, {}, true)) == 0.0);
        const Graph dag = support::from_text_edges(3, {{0, 1, 1}, {1, 2, 1}}, true);
        CHECK(spectral_radius(dag) == 0.0);
    }

    TEST_CASE("undirected invariants on random graphs") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            Graph g = generators::random_connected(5 + seed % 40, 4, seed);
            if (seed % 3 == 0) g = support::reweighted(g, seed);
            const auto info = dominant_eigenpair(g);
            CHECK(norm2(info.vector) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(*std::min_element(info.vector.begin(), info.vector.end()) > 0.0);
            CHECK(residual(g, info) <= 1e-10 * info.lambda1 * (1 + 1e-6));
            // Rayleigh quotient agrees with λ₁.
            std::vector<double> y(g.num_nodes());
            g.multiply(info.vector, y);
            double rq = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) rq += y[i] * info.vector[i];
            CHECK(std::abs(rq - info.lambda1) <= 1e-10 * info.lambda1);

            {
                const auto e = oracle::jacobi(oracle::adjacency(g));
                const double l1 = static_cast<double>(e.values.back());
                const double l2 = static_cast<double>(e.values[e.values.size() - 2]);
                CHECK(info.lambda1 == doctest::Approx(l1).epsilon(1e-10));
                const double s2 = second_eigenvalue(g, info);
                CHECK(std::abs(s2 - l2) <= 1e-6 * l1);
            }
        }
    }

    TEST_CASE("directed: left and right eigenvalues agree and match a dense solver") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            Graph g = generators::random_strongly_connected(5 + seed % 40, 3, seed);
            if (seed % 2) g = support::reweighted(g, seed);
            const auto right = dominant_eigenpair(g, Side::Broadcast);
            const auto left = dominant_eigenpair(g, Side::Receive);
            CHECK(std::abs(right.lambda1 - left.lambda1) <= 2e-10 * right.lambda1);
            CHECK(*std::min_element(right.vector.begin(), right.vector.end()) > 0.0);
            CHECK(*std::min_element(left.vector.begin(), left.vector.end()) > 0.0);
            const auto a = oracle::adjacency(g);
            const auto pr = oracle::perron_general(a);
            const auto pl = oracle::perron_general(oracle::transpose(a));
            CHECK(right.lambda1 == doctest::Approx(pr.lambda).epsilon(1e-9));
            CHECK(support::max_abs_diff(right.vector, pr.vector) < 1e-6);
            CHECK(support::max_abs_diff(left.vector, pl.vector) < 1e-6);
        }
    }
}
