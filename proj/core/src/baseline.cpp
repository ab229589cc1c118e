#include "likert/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "likert/errors.hpp"
#include "likert/format.hpp"

namespace likert {

namespace {

// Average ranks (1-based), equal values sharing the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

nlohmann::json histogram_to_json(const std::map<int, int>& histogram) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [group_size, count] : histogram) {
        obj[std::to_string(group_size)] = count;
    }
    return obj;
}

}  // namespace

BaselineScores mean_baseline(const AnnotationMatrix& matrix) {
    const std::size_t m = matrix.annotators();
    const std::size_t n = matrix.datapoints();
    BaselineScores scores;
    scores.means.resize(n, 0.0);
    scores.counts.resize(n, 0);

    std::vector<std::size_t> empty_columns;
    for (std::size_t j = 0; j < n; ++j) {
        long long sum = 0;
        int count = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const int r = matrix(i, j);
            if (r != 0) {
                sum += r;
                ++count;
            }
        }
        scores.counts[j] = count;
        if (count == 0) {
            empty_columns.push_back(j);
        } else {
            scores.means[j] = static_cast<double>(sum) / static_cast<double>(count);
        }
    }
    if (!empty_columns.empty()) {
        std::string ids;
        for (std::size_t j : empty_columns) {
            if (!ids.empty()) ids += ", ";
            ids += matrix.datapoint_ids()[j];
        }
        throw AllMissingColumn("datapoints with no ratings at all: " + ids,
                               std::move(empty_columns));
    }
    return scores;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DimensionError("spearman: lengths " + std::to_string(x.size()) + " and " +
                             std::to_string(y.size()) + " differ");
    }
    if (x.size() < 2) throw ValidationError("spearman: need at least 2 values");

    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);

    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0) throw ZeroVariance("spearman: first vector is constant");
    if (syy <= 0.0) throw ZeroVariance("spearman: second vector is constant");
    return sxy / std::sqrt(sxx * syy);
}

Discrimination discrimination(std::span<const double> scores, double tolerance) {
    if (tolerance < 0.0) {
        throw ValidationError("discrimination: negative tolerance " + std::to_string(tolerance));
    }
    Discrimination result;
    if (scores.empty()) return result;

    std::vector<double> sorted(scores.begin(), scores.end());
    std::sort(sorted.begin(), sorted.end());

    int group_size = 1;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i < sorted.size() && sorted[i] - sorted[i - 1] <= tolerance) {
            ++group_size;
        } else {
            ++result.distinct_count;
            ++result.tie_histogram[group_size];
            group_size = 1;
        }
    }
    return result;
}

ComparisonReport evaluate(const AnnotationMatrix& matrix, const DenoisedResult& result,
                          const std::optional<std::vector<double>>& truth) {
    const std::size_t n = matrix.datapoints();
    if (result.presentation_scores.size() != n) {
        throw DimensionError("evaluate: result has " +
                             std::to_string(result.presentation_scores.size()) +
                             " scores for " + std::to_string(n) + " datapoints");
    }
    if (truth && truth->size() != n) {
        throw DimensionError("evaluate: truth has " + std::to_string(truth->size()) +
                             " values for " + std::to_string(n) + " datapoints");
    }

    const BaselineScores baseline = mean_baseline(matrix);
    const std::vector<double>& denoised = result.presentation_scores;

    ComparisonReport report;
    report.spearman_mean_vs_denoised = spearman(baseline.means, denoised);

    // Ties in means are structural (quantized at 1/m); ties in projections
    // are floating-point coincidences.
    const Discrimination mean_disc = discrimination(baseline.means, 0.0);
    const Discrimination denoised_disc = discrimination(denoised, 1e-9);
    report.distinct_values.mean = mean_disc.distinct_count;
    report.distinct_values.denoised = denoised_disc.distinct_count;
    report.mean_tie_histogram = mean_disc.tie_histogram;
    report.denoised_tie_histogram = denoised_disc.tie_histogram;

    if (truth) {
        report.spearman_mean_vs_truth = spearman(baseline.means, *truth);
        report.spearman_denoised_vs_truth = spearman(denoised, *truth);
    }
    return report;
}

std::string ComparisonReport::to_json() const {
    nlohmann::json j;
    j["spearman_mean_vs_denoised"] = round_for_output(spearman_mean_vs_denoised);
    j["distinct_values"] = {{"mean", distinct_values.mean},
                            {"denoised", distinct_values.denoised}};
    j["tie_histogram"] = {{"mean", histogram_to_json(mean_tie_histogram)},
                          {"denoised", histogram_to_json(denoised_tie_histogram)}};
    if (spearman_mean_vs_truth && spearman_denoised_vs_truth) {
        j["vs_truth"] = {{"mean", round_for_output(*spearman_mean_vs_truth)},
                         {"denoised", round_for_output(*spearman_denoised_vs_truth)}};
    }
    return j.dump(2) + "\n";
}

}  // namespace likert
