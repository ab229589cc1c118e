#include "likert/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "likert/baseline.hpp"
#include "likert/errors.hpp"
#include "likert/linalg.hpp"

namespace likert {

namespace {

// Candidates whose a^T B a (against the unridged B) falls below this have
// essentially all their constraint mass in the ridge; they cannot be
// normalized to a^T B a = 1.
constexpr double kNormalizableFloor = 1e-6;

// Projections with coefficient of variation at or below this carry no
// ordering information.
constexpr double kTrivialCv = 1e-8;

double quadratic_form(const SymMatrix& s, const std::vector<double>& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) row += s(i, j) * a[j];
        acc += a[i] * row;
    }
    return acc;
}

double coefficient_of_variation(const std::vector<double>& y) {
    const double n = static_cast<double>(y.size());
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : y) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / n);
    if (std::abs(mean) > 0.0) return sd / std::abs(mean);
    return sd > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

std::vector<double> project_direction(const Mat& x, const std::vector<double>& a) {
    std::vector<double> y(x.cols(), 0.0);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < x.rows(); ++i) acc += a[i] * x(i, j);
        y[j] = acc;
    }
    return y;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

Embedding solve_embedding(const AnnotationMatrix& matrix, const LaplacianPair& pair,
                          const EmbeddingOptions& options) {
    const std::size_t n = matrix.datapoints();
    const std::size_t m = matrix.annotators();
    if (pair.laplacian.rows() != n || pair.laplacian.cols() != n) {
        throw DimensionError("solve_embedding: Laplacian is " +
                             std::to_string(pair.laplacian.rows()) + "x" +
                             std::to_string(pair.laplacian.cols()) + " for " + std::to_string(n) +
                             " datapoints");
    }

    const Mat x = matrix.to_real();
    const SymMatrix m_mat = sandwich(pair.laplacian, x);
    Mat d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = pair.avg_degree[i];
    const SymMatrix b_mat = sandwich(d, x);

    // Solve, regularizing the constraint matrix once if it is singular.
    double epsilon = 0.0;
    std::vector<EigenPair> pairs;
    try {
        pairs = generalized_eigen(m_mat, b_mat);
    } catch (const NotPositiveDefinite&) {
        switch (options.ridge.kind) {
            case RidgeSetting::Kind::off:
                throw;
            case RidgeSetting::Kind::fixed:
                epsilon = options.ridge.value;
                break;
            case RidgeSetting::Kind::automatic: {
                double trace = 0.0;
                for (std::size_t i = 0; i < m; ++i) trace += b_mat(i, i);
                epsilon = 1e-10 * trace / static_cast<double>(m);
                break;
            }
        }
        if (epsilon <= 0.0) {
            throw DegenerateProblem(
                "constraint matrix X D_avg X^T has no positive mass; every annotator graph is "
                "empty (no two datapoints share a nonzero rating)");
        }
        Mat ridged = b_mat.mat();
        for (std::size_t i = 0; i < m; ++i) ridged(i, i) += epsilon;
        pairs = generalized_eigen(m_mat, SymMatrix(std::move(ridged)));
    }

    // Pick the eigenpair: the literal smallest under `paper`, the smallest
    // with a non-constant, B-normalizable projection under `skip_trivial`.
    std::size_t chosen = pairs.size();
    bool skipped = false;
    if (options.selection == SelectionMode::paper) {
        chosen = 0;
        if (quadratic_form(b_mat, pairs[0].vector) <= kNormalizableFloor) {
            throw DegenerateProblem(
                "smallest eigenpair cannot satisfy the constraint a^T X D_avg X^T a = 1; the "
                "constraint matrix is singular along it");
        }
    } else {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (quadratic_form(b_mat, pairs[k].vector) <= kNormalizableFloor) continue;
            const std::vector<double> y = project_direction(x, pairs[k].vector);
            if (coefficient_of_variation(y) > kTrivialCv) {
                chosen = k;
                skipped = k > 0;
                break;
            }
        }
        if (chosen == pairs.size()) {
            throw DegenerateProblem(
                "every eigenpair projects the datapoints onto a near-constant line");
        }
    }

    Embedding embedding;
    embedding.direction = std::move(pairs[chosen].vector);
    const double q = quadratic_form(b_mat, embedding.direction);
    const double scale = 1.0 / std::sqrt(q);
    for (double& v : embedding.direction) v *= scale;
    embedding.eigenvalue = quadratic_form(m_mat, embedding.direction);
    embedding.constraint_residual = std::abs(quadratic_form(b_mat, embedding.direction) - 1.0);
    embedding.selection = SelectionInfo{chosen, skipped, epsilon};
    return embedding;
}

std::vector<double> project(const AnnotationMatrix& matrix, const Embedding& embedding) {
    if (embedding.direction.size() != matrix.annotators()) {
        throw DimensionError("project: direction has " +
                             std::to_string(embedding.direction.size()) + " weights for " +
                             std::to_string(matrix.annotators()) + " annotators");
    }
    return project_direction(matrix.to_real(), embedding.direction);
}

Postprocessed postprocess(const std::vector<double>& y, int scale_max, FlipMode flip,
                          const std::vector<double>& baseline) {
    if (scale_max < 2) {
        throw ValidationError("scale_max must be at least 2, got " + std::to_string(scale_max));
    }
    if (y.empty()) throw ValidationError("postprocess: empty score vector");

    Postprocessed out;
    switch (flip) {
        case FlipMode::on:
            out.flipped = true;
            break;
        case FlipMode::off:
            out.flipped = false;
            break;
        case FlipMode::automatic: {
            if (baseline.size() != y.size()) {
                throw DimensionError("flip=auto needs a baseline of length " +
                                     std::to_string(y.size()) + ", got " +
                                     std::to_string(baseline.size()));
            }
            out.flipped = pearson(y, baseline) < 0.0;
            break;
        }
    }

    std::vector<double> oriented = y;
    if (out.flipped) {
        for (double& v : oriented) v = -v;
    }

    const auto [lo_it, hi_it] = std::minmax_element(oriented.begin(), oriented.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const std::size_t n = y.size();
    out.presentation_scores.resize(n);
    if (hi == lo) {
        const double midpoint = 0.5 * (1.0 + static_cast<double>(scale_max));
        std::fill(out.presentation_scores.begin(), out.presentation_scores.end(), midpoint);
    } else {
        const double span = static_cast<double>(scale_max) - 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            out.presentation_scores[j] = 1.0 + span * (oriented[j] - lo) / (hi - lo);
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&out](std::size_t a, std::size_t b) {
        return out.presentation_scores[a] < out.presentation_scores[b];
    });
    out.ranks.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        out.ranks[order[pos]] = static_cast<int>(pos + 1);
    }
    return out;
}

DenoisedResult denoise_pipeline(const AnnotationMatrix& matrix, const PipelineOptions& options) {
    const std::vector<AnnotatorGraph> graphs = build_all_graphs(matrix);
    const LaplacianPair pair = average_graphs(graphs);

    Embedding embedding =
        solve_embedding(matrix, pair, EmbeddingOptions{options.selection, options.ridge});
    std::vector<double> y = project(matrix, embedding);

    std::vector<double> baseline;
    if (options.flip == FlipMode::automatic) {
        baseline = mean_baseline(matrix).means;
    }
    Postprocessed post = postprocess(y, matrix.scale_max(), options.flip, baseline);

    DenoisedResult result;
    result.raw_scores = std::move(y);
    result.flipped = post.flipped;
    result.presentation_scores = std::move(post.presentation_scores);
    result.ranks = std::move(post.ranks);
    result.embedding = std::move(embedding);
    return result;
}

}  // namespace likert
