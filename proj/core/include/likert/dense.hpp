#pragma once

#include <cstddef>
#include <vector>

namespace likert {

// Dense row-major matrix of doubles. Everything in this project is small
// (orders up to a few thousand for graphs, a few hundred for solvers), so
// there is no sparse path and no blocking.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t order) {
        Mat m(order, order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const std::vector<double>& data() const { return data_; }

    bool operator==(const Mat& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double frobenius_norm(const Mat& m);

// out = a * b with plain triple loops, fixed accumulation order.
Mat multiply(const Mat& a, const Mat& b);

Mat transpose(const Mat& m);

}  // namespace likert
