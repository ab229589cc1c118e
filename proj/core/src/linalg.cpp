#include "likert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "likert/errors.hpp"

namespace likert {

namespace {

double off_diagonal_norm(const Mat& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// Solves G * W = rhs for lower-triangular G, one column at a time.
Mat forward_solve(const Mat& g, const Mat& rhs) {
    const std::size_t n = g.rows();
    Mat w(n, rhs.cols());
    for (std::size_t col = 0; col < rhs.cols(); ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = rhs(i, col);
            for (std::size_t j = 0; j < i; ++j) acc -= g(i, j) * w(j, col);
            w(i, col) = acc / g(i, i);
        }
    }
    return w;
}

// Solves G^T * a = u for lower-triangular G (so G^T is upper-triangular).
std::vector<double> back_solve_transposed(const Mat& g, const std::vector<double>& u) {
    const std::size_t n = g.rows();
    std::vector<double> a(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = u[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= g(j, ii) * a[j];
        a[ii] = acc / g(ii, ii);
    }
    return a;
}

}  // namespace

SymMatrix::SymMatrix(Mat entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw DimensionError("SymMatrix: " + std::to_string(entries_.rows()) + "x" +
                             std::to_string(entries_.cols()) + " is not square");
    }
    const std::size_t n = entries_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double upper = entries_(i, j);
            const double lower = entries_(j, i);
            if (std::abs(upper - lower) > 1e-12 * (1.0 + std::abs(upper))) {
                throw ValidationError("SymMatrix: entries (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") and transpose differ by " +
                                      std::to_string(std::abs(upper - lower)));
            }
            const double mean = 0.5 * (upper + lower);
            entries_(i, j) = mean;
            entries_(j, i) = mean;
        }
    }
}

SymMatrix sandwich(const Mat& inner, const Mat& x) {
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();
    if (inner.rows() != n || inner.cols() != n) {
        throw DimensionError("sandwich: inner is " + std::to_string(inner.rows()) + "x" +
                             std::to_string(inner.cols()) + ", expected " + std::to_string(n) +
                             "x" + std::to_string(n));
    }
    // T = X * inner, then R = T * X^T.
    Mat t(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                t(i, j) += xik * inner(k, j);
            }
        }
    }
    Mat r(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += t(i, k) * x(j, k);
            r(i, j) = acc;
        }
    }
    // Kill rounding skew before the strict SymMatrix check.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double mean = 0.5 * (r(i, j) + r(j, i));
            r(i, j) = mean;
            r(j, i) = mean;
        }
    }
    return SymMatrix(std::move(r));
}

Mat cholesky(const SymMatrix& b) {
    const std::size_t n = b.order();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, b(i, i));
    const double pivot_floor = 1e-12 * max_diag;

    Mat g(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double d = b(k, k);
        for (std::size_t j = 0; j < k; ++j) d -= g(k, j) * g(k, j);
        if (d <= pivot_floor) {
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(d) + " at index " +
                                      std::to_string(k) + " is not above " +
                                      std::to_string(pivot_floor));
        }
        g(k, k) = std::sqrt(d);
        for (std::size_t i = k + 1; i < n; ++i) {
            double acc = b(i, k);
            for (std::size_t j = 0; j < k; ++j) acc -= g(i, j) * g(k, j);
            g(i, k) = acc / g(k, k);
        }
    }
    return g;
}

std::vector<EigenPair> jacobi_eigen(const SymMatrix& s) {
    const std::size_t n = s.order();
    Mat a = s.mat();
    Mat v = Mat::identity(n);

    const double tol = 1e-12 * frobenius_norm(a);
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    while (off_diagonal_norm(a) > tol) {
        if (sweep++ >= kMaxSweeps) {
            throw NoConvergence("jacobi_eigen: off-diagonal norm " +
                                std::to_string(off_diagonal_norm(a)) + " after " +
                                std::to_string(kMaxSweeps) + " sweeps");
        }
        // One cyclic sweep, fixed row-major order of (p, q) pairs.
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - sn * aiq;
                    a(p, i) = a(i, p);
                    a(i, q) = sn * aip + c * aiq;
                    a(q, i) = a(i, q);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v(i, p);
                    const double viq = v(i, q);
                    v(i, p) = c * vip - sn * viq;
                    v(i, q) = sn * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t lhs, std::size_t rhs) { return a(lhs, lhs) < a(rhs, rhs); });

    std::vector<EigenPair> pairs(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        pairs[k].value = a(src, src);
        pairs[k].vector.resize(n);
        for (std::size_t i = 0; i < n; ++i) pairs[k].vector[i] = v(i, src);
    }
    return pairs;
}

std::vector<EigenPair> generalized_eigen(const SymMatrix& m_mat, const SymMatrix& b_mat) {
    if (m_mat.order() != b_mat.order()) {
        throw DimensionError("generalized_eigen: orders " + std::to_string(m_mat.order()) +
                             " and " + std::to_string(b_mat.order()) + " differ");
    }
    const Mat g = cholesky(b_mat);

    // C = G^-1 * M * G^-T, assembled with two triangular solves.
    const Mat w = forward_solve(g, m_mat.mat());
    Mat c = transpose(forward_solve(g, transpose(w)));
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = i + 1; j < c.cols(); ++j) {
            const double mean = 0.5 * (c(i, j) + c(j, i));
            c(i, j) = mean;
            c(j, i) = mean;
        }
    }

    std::vector<EigenPair> pairs = jacobi_eigen(SymMatrix(std::move(c)));
    for (EigenPair& pair : pairs) {
        pair.vector = back_solve_transposed(g, pair.vector);
    }
    return pairs;
}

}  // namespace likert
