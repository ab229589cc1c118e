#pragma once

#include <cstddef>
#include <vector>

#include "likert/dense.hpp"

namespace likert {

// Symmetric matrix. The constructor checks that the input is symmetric to
// within 1e-12 relative skew and stores the exactly symmetrized average, so
// downstream solvers never see rounding skew.
class SymMatrix {
public:
    explicit SymMatrix(Mat entries);

    std::size_t order() const { return entries_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const Mat& mat() const { return entries_; }

private:
    Mat entries_;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

// X * inner * X^T for an n x n symmetric `inner` and an m x n `x`.
// The result is symmetrized before it is returned.
SymMatrix sandwich(const Mat& inner, const Mat& x);

// Lower-triangular G with G * G^T = b. A pivot at or below
// 1e-12 * max(diag(b)) raises NotPositiveDefinite; the caller decides
// whether to regularize.
Mat cholesky(const SymMatrix& b);

// Cyclic Jacobi eigensolver. Sweeps rows in a fixed order until the
// off-diagonal Frobenius norm drops below 1e-12 * ||s||_F, capped at 100
// sweeps (NoConvergence beyond that). Pairs come back ascending by value
// with mutually orthonormal vectors.
std::vector<EigenPair> jacobi_eigen(const SymMatrix& s);

// Symmetric-definite generalized problem  m_mat * a = lambda * b_mat * a,
// reduced with G = cholesky(b_mat) to a standard Jacobi solve on
// G^-1 * m_mat * G^-T. Returned vectors satisfy a^T * b_mat * a = 1.
std::vector<EigenPair> generalized_eigen(const SymMatrix& m_mat, const SymMatrix& b_mat);

}  // namespace likert
