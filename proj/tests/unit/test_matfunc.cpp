#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "oracle/dense.hpp"
#include "support.hpp"
#include "walkrank/error.hpp"
#include "walkrank/fixtures.hpp"
#include "walkrank/generators.hpp"
#include "walkrank/matfunc.hpp"
#include "walkrank/spectral.hpp"
#include "walkrank/structure.hpp"

using namespace walkrank;

namespace {

const double kE2 = (std::exp(2.0) + 2.0 * std::exp(-1.0)) / 3.0;

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

std::vector<double> to_double(const std::vector<long double> &x) { return {x.begin(), x.end()}; }

} // namespace

TEST_SUITE("series functions") {
    TEST_CASE("built-in series") {
        const auto e = SeriesFunction::exponential();
        CHECK(e.entire());
        CHECK(e.class_tag() == SeriesClass::Entire);
        CHECK(e.coefficient(0) == 1.0);
        CHECK(e.coefficient(4) == doctest::Approx(1.0 / 24));
        CHECK(e.ratio(3) == doctest::Approx(0.25));
        CHECK(e.evaluate(1.0) == doctest::Approx(std::exp(1.0)));
        CHECK(e.evaluate_shifted(1e-12) == doctest::Approx(1e-12).epsilon(1e-10));

        const auto r = SeriesFunction::resolvent();
        CHECK(r.radius() == 1.0);
        CHECK(r.class_tag() == SeriesClass::DivergentAtRadius);
        CHECK(r.coefficient(17) == 1.0);
        CHECK(r.evaluate(0.5) == doctest::Approx(2.0));
        CHECK_THROWS_AS(r.evaluate(1.0), DomainError);
    }

    TEST_CASE("custom series") {
        // cosh-like coefficients would not be positive; use f(z) = −log(1 − z)/z, c_k = 1/(k+1).
        const auto f = SeriesFunction::custom([](std::size_t k) { return 1.0 / static_cast<double>(k + 1); }, 1.0,
                                              SeriesClass::Positive);
        CHECK(f.evaluate(0.5) == doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-10));
        CHECK(f.ratio(1) == doctest::Approx(2.0 / 3.0));
        CHECK_THROWS_AS(SeriesFunction::custom({}, 1.0, SeriesClass::Positive), ValidationError);
        CHECK_THROWS_AS(SeriesFunction::custom([](std::size_t) { return 1.0; }, 0.0, SeriesClass::Positive),
                        ValidationError);
        const auto bad = SeriesFunction::custom([](std::size_t k) { return k == 3 ? 0.0 : 1.0; }, 1.0,
                                                SeriesClass::Positive);
        CHECK_THROWS_AS(bad.coefficient(3), ValidationError);
    }

    TEST_CASE("feasible interval") {
        CHECK(std::isinf(feasible_interval(SeriesFunction::exponential(), 3.0)));
        CHECK(feasible_interval(SeriesFunction::resolvent(), 2.0) == 0.5);
        const double l1 = dominant_eigenpair(fixtures::karate_club()).lambda1;
        CHECK(std::abs(feasible_interval(SeriesFunction::resolvent(), l1) - 0.14868) <= 1e-4);
    }
}

TEST_SUITE("series actions") {
    TEST_CASE("t = 0 returns c0 v") {
        const Graph g = support::path3();
        const std::vector<double> v{1, -2, 3};
        CHECK(apply_series(SeriesFunction::exponential(), 0.0, g, v).values == v);
        CHECK(resolvent_solve(0.0, g, v).values == v);
        CHECK(exp_action(0.0, g, v).values == v);
    }

    TEST_CASE("resolvent on K3") {
        const Graph g = support::triangle();
        for (double x : apply_series(SeriesFunction::resolvent(), 0.25, g, ones(3)).values)
            CHECK(x == doctest::Approx(2.0).epsilon(1e-11));
        for (double x : resolvent_solve(0.25, g, ones(3)).values) CHECK(x == doctest::Approx(2.0).epsilon(1e-11));
    }

    TEST_CASE("exponential on P3 and K3 against dense Taylor") {
        const Graph p3 = support::path3();
        const auto want = oracle::row_sums(oracle::expm(oracle::adjacency(p3), 1.0L));
        const auto got = apply_series(SeriesFunction::exponential(), 1.0, p3, ones(3)).values;
        CHECK(support::max_abs_diff(got, to_double(want)) <= 1e-10);

        for (double x : exp_action(1.0, support::triangle(), ones(3)).values)
            CHECK(x == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
    }

    TEST_CASE("small beta recovers degrees") {
        const double beta = 1e-7;
        const auto x = exp_action(beta, support::path3(), ones(3)).values;
        CHECK((x[0] - 1) / beta == doctest::Approx(1.0).epsilon(1e-6));
        CHECK((x[1] - 1) / beta == doctest::Approx(2.0).epsilon(1e-6));
        CHECK((x[2] - 1) / beta == doctest::Approx(1.0).epsilon(1e-6));
    }

    TEST_CASE("karate against dense oracles") {
        const Graph g = fixtures::karate_club();
        const auto a = oracle::adjacency(g);
        const auto tc = exp_action(1.0, g, ones(34)).values;
        CHECK(support::max_rel_diff(tc, to_double(oracle::row_sums(oracle::expm(a, 1.0L)))) <= 1e-8);
        const double l1 = dominant_eigenpair(g).lambda1;
        const auto k = resolvent_solve(0.9 / l1, g, ones(34)).values;
        CHECK(support::max_rel_diff(k, to_double(oracle::row_sums(oracle::resolvent(a, 0.9L / l1)))) <= 1e-8);
    }

    TEST_CASE("domain errors name the bound") {
        const Graph g = support::triangle();
        try {
            resolvent_solve(0.5, g, ones(3));
            FAIL("expected DomainError");
        } catch (const DomainError &e) {
            CHECK(std::string(e.what()).find("alpha must be < 1/lambda1 = 0.5") != std::string::npos);
        }
        CHECK_THROWS_AS(apply_series(SeriesFunction::resolvent(), 0.6, g, ones(3)), DomainError);
        CHECK_THROWS_AS(apply_series(SeriesFunction::exponential(), -1.0, g, ones(3)), DomainError);
        CHECK_THROWS_AS(exp_action(-1.0, g, ones(3)), DomainError);
        CHECK_THROWS_AS(fA_diagonal(SeriesFunction::resolvent(), 0.5, g), DomainError);
        CHECK_THROWS_AS(exp_action(1.0, g, ones(2)), ValidationError);
        CHECK_THROWS_AS(exp_action(400.0, fixtures::karate_club(), ones(34)), DomainError);
    }

    TEST_CASE("truncation cap") {
        const Graph g = fixtures::karate_club();
        const double l1 = dominant_eigenpair(g).lambda1;
        const auto op = LinearOperator::adjacency(g);
        try {
            apply_series(SeriesFunction::resolvent(), 0.99 / l1, op, ones(34), 1e-12, l1, 10);
            FAIL("expected TruncationError");
        } catch (const TruncationError &e) {
            CHECK(e.bound() > 1e-12);
        }
    }

    TEST_CASE("exp_action is deterministic") {
        const Graph g = generators::random_connected(40, 5, 3);
        const auto a = exp_action(2.5, g, ones(40)).values;
        const auto b = exp_action(2.5, g, ones(40)).values;
        CHECK(a == b);
    }
}

TEST_SUITE("diagonals") {
    TEST_CASE("K3 closed forms") {
        for (double x : fA_diagonal(SeriesFunction::exponential(), 1.0, support::triangle()))
            CHECK(x == doctest::Approx(kE2).epsilon(1e-13));
        for (double x : fA_diagonal(SeriesFunction::resolvent(), 0.25, support::triangle()))
            CHECK(x == doctest::Approx(1.2).epsilon(1e-13));
    }

    TEST_CASE("small t recovers degrees") {
        for (const auto &f : {SeriesFunction::exponential(), SeriesFunction::resolvent()}) {
            const double t = 1e-4;
            const auto d = fA_diagonal(f, t, support::path3());
            const double c2 = f.coefficient(2);
            CHECK((d[0] - f.coefficient(0)) / (c2 * t * t) == doctest::Approx(1.0).epsilon(1e-6));
            CHECK((d[1] - f.coefficient(0)) / (c2 * t * t) == doctest::Approx(2.0).epsilon(1e-6));
        }
    }

    TEST_CASE("custom series diagonal") {
        // c_k = 1/(k+1)^2, R = 1.
        const auto f = SeriesFunction::custom(
            [](std::size_t k) { return 1.0 / static_cast<double>((k + 1) * (k + 1)); }, 1.0,
            SeriesClass::Positive);
        const Graph g = generators::random_connected(12, 3, 5);
        const double l1 = dominant_eigenpair(g).lambda1;
        const double t = 0.7 / l1;
        const auto d = fA_diagonal(f, t, g);
        // Series oracle: Σ c_k t^k diag(A^k).
        const auto a = oracle::adjacency(g);
        auto power = oracle::Matrix::identity(a.n);
        std::vector<long double> want(a.n, 0.0L);
        for (std::size_t k = 0; k < 400; ++k) {
            for (std::size_t i = 0; i < a.n; ++i)
                want[i] += power(i, i) * std::pow(static_cast<long double>(t), k) / ((k + 1.0L) * (k + 1.0L));
            power = oracle::multiply(power, a);
        }
        CHECK(support::max_rel_diff(d, to_double(want)) <= 1e-10);
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(fA_diagonal(SeriesFunction::exponential(), 1.0, generators::ring(4, true)),
                        UnsupportedError);
        setenv("CENTRALITY_DENSE_LIMIT", "10", 1);
        CHECK(dense_limit() == 10);
        CHECK_THROWS_AS(fA_diagonal(SeriesFunction::exponential(), 1.0, fixtures::karate_club()), CapacityError);
        unsetenv("CENTRALITY_DENSE_LIMIT");
        CHECK(dense_limit() == 3000);
    }

    TEST_CASE("extreme parameters keep the degree and eigenvector orderings resolvable") {
        const Graph g = fixtures::karate_club();
        const auto small = fA_diagonal(SeriesFunction::exponential(), 1e-6, g);
        const auto d = degrees(g);
        for (std::size_t i = 0; i < 34; ++i)
            for (std::size_t j = 0; j < 34; ++j)
                if (d[i] > d[j]) CHECK(small[i] > small[j]);
    }
}

TEST_SUITE("matfunc invariants") {
    TEST_CASE("resolvent series agrees with the Neumann solver") {
        std::mt19937_64 rng(11);
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            const Graph g = support::reweighted(generators::random_connected(5 + seed % 46, 4, seed), seed);
            const double l1 = dominant_eigenpair(g).lambda1;
            const double alpha = std::uniform_real_distribution<double>(0.01, 0.95)(rng) / l1;
            const double tol = 1e-12;
            const auto a = apply_series(SeriesFunction::resolvent(), alpha, g, ones(g.num_nodes()), tol,
                                        Side::Broadcast, l1).values;
            const auto b = resolvent_solve(alpha, g, ones(g.num_nodes()), tol).values;
            double diff = 0.0, total = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) diff += std::abs(a[i] - b[i]), total += std::abs(b[i]);
            CHECK(diff <= 10 * tol * total);
        }
    }

    TEST_CASE("semigroup property of exp_action") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const bool directed = seed % 2 == 0;
            Graph g = directed ? generators::random_strongly_connected(30, 3, seed)
                               : generators::random_connected(30, 4, seed);
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> u(0.05, 2.0);
            const double b1 = u(rng), b2 = u(rng);
            std::vector<double> v(30);
            for (double &x : v) x = u(rng);
            const auto whole = exp_action(b1 + b2, g, v).values;
            const auto inner = exp_action(b2, g, v).values;
            const auto split = exp_action(b1, g, inner).values;
            CHECK(support::max_rel_diff(split, whole) <= 1e-8);
        }
    }

    TEST_CASE("diagonals are positive, match column extraction and the trace identity") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const std::size_t n = 4 + seed % 17;
            Graph g = generators::random_connected(n, 3, seed);
            if (seed % 2) g = support::reweighted(g, seed);
            const double l1 = dominant_eigenpair(g).lambda1;
            const auto eig = oracle::jacobi(oracle::adjacency(g));
            for (double t : {0.3, 1.0, 3.0}) {
                const auto d = fA_diagonal(SeriesFunction::exponential(), t, g);
                long double trace = 0.0L, want = 0.0L;
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(d[i] > 0.0);
                    std::vector<double> e(n, 0.0);
                    e[i] = 1.0;
                    CHECK(d[i] == doctest::Approx(exp_action(t, g, e).values[i]).epsilon(1e-8));
                    trace += d[i];
                }
                for (auto l : eig.values) want += std::exp(t * l);
                CHECK(static_cast<double>(std::fabs(trace - want) / want) <= 1e-8);
            }
            for (double tau : {0.2, 0.6, 0.95}) {
                const auto f = SeriesFunction::resolvent();
                const auto d = fA_diagonal(f, tau / l1, g);
                long double trace = 0.0L, want = 0.0L;
                for (double x : d) {
                    CHECK(x > 0.0);
                    trace += x;
                }
                for (auto l : eig.values) want += 1.0L / (1.0L - (tau / l1) * l);
                CHECK(static_cast<double>(std::fabs(trace - want) / want) <= 1e-8);
            }
        }
    }
}
