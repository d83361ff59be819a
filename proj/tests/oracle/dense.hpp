#pragma once

// Dense brute-force references in long double. Nothing here calls into the
// library's numerical code; only Graph accessors are used to read edges.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walkrank/graph.hpp"

namespace oracle {

using Real = long double;

struct Matrix {
    std::size_t n = 0;
    std::vector<Real> a;

    explicit Matrix(std::size_t size = 0) : n(size), a(size * size, 0.0L) {}
    Real &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    Real operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0L;
        return m;
    }
};

inline Matrix adjacency(const walkrank::Graph &g) {
    Matrix m(g.num_nodes());
    for (const auto &e : g.edges()) {
        m(e.source, e.target) += e.weight;
        if (!g.directed() && e.source != e.target) m(e.target, e.source) += e.weight;
    }
    return m;
}

inline Matrix transpose(const Matrix &m) {
    Matrix t(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) t(j, i) = m(i, j);
    return t;
}

inline Matrix multiply(const Matrix &x, const Matrix &y) {
    Matrix z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const Real xik = x(i, k);
            if (xik == 0.0L) continue;
            for (std::size_t j = 0; j < x.n; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

inline Matrix scaled(Matrix m, Real s) {
    for (auto &x : m.a) x *= s;
    return m;
}

inline std::vector<Real> matvec(const Matrix &m, const std::vector<Real> &v) {
    std::vector<Real> y(m.n, 0.0L);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) y[i] += m(i, j) * v[j];
    return y;
}

inline std::vector<Real> row_sums(const Matrix &m) {
    return matvec(m, std::vector<Real>(m.n, 1.0L));
}

inline std::vector<Real> diagonal(const Matrix &m) {
    std::vector<Real> d(m.n);
    for (std::size_t i = 0; i < m.n; ++i) d[i] = m(i, i);
    return d;
}

/// Gauss–Jordan inverse with partial pivoting.
inline Matrix inverse(Matrix m) {
    const std::size_t n = m.n;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m(r, col)) > std::fabs(m(pivot, col))) pivot = r;
        if (m(pivot, col) == 0.0L) throw std::runtime_error("singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(col, j), m(pivot, j));
            std::swap(inv(col, j), inv(pivot, j));
        }
        const Real d = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0.0L) continue;
            const Real f = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// (I − αM)⁻¹.
inline Matrix resolvent(const Matrix &m, Real alpha) {
    Matrix r = scaled(m, -alpha);
    for (std::size_t i = 0; i < m.n; ++i) r(i, i) += 1.0L;
    return inverse(r);
}

/// e^{βM}: Taylor series of e^{βM/2^s} summed until terms vanish in long
/// double, then squared s times.
inline Matrix expm(const Matrix &m, Real beta) {
    const std::size_t n = m.n;
    Real norm = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        Real row = 0.0L;
        for (std::size_t j = 0; j < n; ++j) row += std::fabs(m(i, j));
        norm = std::max(norm, row);
    }
    int s = 0;
    while (std::fabs(beta) * norm / std::ldexp(1.0L, s) > 0.5L) ++s;
    const Matrix x = scaled(m, beta / std::ldexp(1.0L, s));
    Matrix sum = Matrix::identity(n), term = Matrix::identity(n);
    for (int k = 1; k < 200; ++k) {
        term = scaled(multiply(term, x), 1.0L / k);
        Real size = 0.0L;
        for (Real t : term.a) size = std::max(size, std::fabs(t));
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += term.a[i];
        if (size == 0.0L || size < 1e-40L) break;
    }
    for (int i = 0; i < s; ++i) sum = multiply(sum, sum);
    return sum;
}

struct SymmetricEigen {
    std::vector<Real> values;  ///< ascending
    Matrix vectors;            ///< column k belongs to values[k]
};

/// Cyclic Jacobi rotations for a symmetric matrix.
inline SymmetricEigen jacobi(Matrix a) {
    const std::size_t n = a.n;
    Matrix v = Matrix::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off = 0.0L;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-60L) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0L) continue;
                const Real theta = (a(q, q) - a(p, p)) / (2.0L * a(p, q));
                const Real t = (theta >= 0 ? 1.0L : -1.0L) /
                               (std::fabs(theta) + std::sqrt(theta * theta + 1.0L));
                const Real c = 1.0L / std::sqrt(t * t + 1.0L), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const Real akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Real apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Real vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    SymmetricEigen e{std::vector<Real>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        e.values[k] = a(idx[k], idx[k]);
        for (std::size_t i = 0; i < n; ++i) e.vectors(i, k) = v(i, idx[k]);
    }
    return e;
}

/// Unit-norm positive dominant eigenvector of a symmetric nonnegative matrix.
inline std::vector<Real> perron_symmetric(const Matrix &a, Real *lambda = nullptr) {
    const auto e = jacobi(a);
    const std::size_t n = a.n, top = n - 1;
    std::vector<Real> q(n);
    Real sum = 0.0L;
    for (std::size_t i = 0; i < n; ++i) sum += e.vectors(i, top);
    for (std::size_t i = 0; i < n; ++i) q[i] = sum < 0 ? -e.vectors(i, top) : e.vectors(i, top);
    if (lambda) *lambda = e.values[top];
    return q;
}

/// Triangles at each node by enumerating all unordered triples; weighted
/// triangles contribute the product of their three edge weights.
inline std::vector<Real> brute_force_triangles(const Matrix &a) {
    const std::size_t n = a.n;
    std::vector<Real> t(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Real w = a(i, j) * a(j, k) * a(i, k);
                if (w == 0.0L) continue;
                t[i] += w;
                t[j] += w;
                t[k] += w;
            }
    return t;
}

/// Dense Google matrix P = α(H + (1/n)1aᵀ) + (1 − α)v1ᵀ.
inline Matrix google_matrix(const walkrank::Graph &g, Real alpha, const std::vector<Real> &v) {
    const Matrix a = adjacency(g);
    const std::size_t n = a.n;
    Matrix p(n);
    for (std::size_t j = 0; j < n; ++j) {
        Real out = 0.0L;
        for (std::size_t k = 0; k < n; ++k) out += a(j, k);
        for (std::size_t i = 0; i < n; ++i) {
            const Real s = out > 0 ? a(j, i) / out : 1.0L / n;
            p(i, j) = alpha * s + (1.0L - alpha) * v[i];
        }
    }
    return p;
}

/// Stationary vector of the dense Google matrix by the direct solve
/// (I − αS)p = (1 − α)v.
inline std::vector<Real> pagerank(const walkrank::Graph &g, Real alpha, const std::vector<Real> &v) {
    const std::size_t n = g.num_nodes();
    const Matrix a = adjacency(g);
    Matrix m = Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        Real out = 0.0L;
        for (std::size_t k = 0; k < n; ++k) out += a(j, k);
        for (std::size_t i = 0; i < n; ++i) m(i, j) -= alpha * (out > 0 ? a(j, i) / out : 1.0L / n);
    }
    std::vector<Real> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = (1.0L - alpha) * v[i];
    auto p = matvec(inverse(m), rhs);
    Real sum = 0.0L;
    for (Real x : p) sum += x;
    for (Real &x : p) x /= sum;
    return p;
}

inline Real max_relative_error(const std::vector<double> &got, const std::vector<Real> &want) {
    Real worst = 0.0L;
    for (std::size_t i = 0; i < want.size(); ++i) {
        const Real scale = std::max(std::fabs(want[i]), std::numeric_limits<Real>::min());
        worst = std::max(worst, std::fabs(static_cast<Real>(got[i]) - want[i]) / scale);
    }
    return worst;
}

} // namespace oracle
