#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "likert/annotation_matrix.hpp"
#include "likert/embedding.hpp"

namespace likert {

// Per-datapoint mean over the nonzero ratings only, with the number of
// ratings that went into each mean.
struct BaselineScores {
    std::vector<double> means;
    std::vector<int> counts;
};

struct Discrimination {
    int distinct_count = 0;
    std::map<int, int> tie_histogram;  // group size -> number of groups
};

struct ComparisonReport {
    struct DistinctValues {
        int mean = 0;
        int denoised = 0;
    };

    double spearman_mean_vs_denoised = 0.0;
    DistinctValues distinct_values;
    std::map<int, int> mean_tie_histogram;
    std::map<int, int> denoised_tie_histogram;
    std::optional<double> spearman_mean_vs_truth;
    std::optional<double> spearman_denoised_vs_truth;

    std::string to_json() const;
};

// Throws AllMissingColumn (with the offending datapoint indices) instead of
// producing NaN means.
BaselineScores mean_baseline(const AnnotationMatrix& matrix);

// Spearman rank correlation with average-rank tie handling. Throws
// ZeroVariance when either vector is constant.
double spearman(std::span<const double> x, std::span<const double> y);

// Groups scores by single-linkage on the sorted sequence: consecutive
// values at most `tolerance` apart share a group.
Discrimination discrimination(std::span<const double> scores, double tolerance);

// Compares the mean baseline against the denoised presentation scores:
// rank agreement, how many distinct values each method produces, tie
// structure, and (when ground truth is known) vs-truth rank correlations.
ComparisonReport evaluate(const AnnotationMatrix& matrix, const DenoisedResult& result,
                          const std::optional<std::vector<double>>& truth = std::nullopt);

}  // namespace likert
