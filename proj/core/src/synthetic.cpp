#include "likert/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "likert/errors.hpp"

namespace likert {

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
    const std::size_t m = spec.n_annotators;
    const std::size_t n = spec.n_datapoints;
    if (m < 1) throw ValidationError("synthetic spec: need at least 1 annotator");
    if (n < 2) throw ValidationError("synthetic spec: need at least 2 datapoints");
    if (spec.scale_max < 2) {
        throw ValidationError("synthetic spec: scale_max must be at least 2, got " +
                              std::to_string(spec.scale_max));
    }
    if (!spec.bias.empty() && spec.bias.size() != m) {
        throw ValidationError("synthetic spec: bias needs " + std::to_string(m) +
                              " entries, got " + std::to_string(spec.bias.size()));
    }
    if (!spec.spread.empty() && spec.spread.size() != m) {
        throw ValidationError("synthetic spec: spread needs " + std::to_string(m) +
                              " entries, got " + std::to_string(spec.spread.size()));
    }
    if (spec.noise_sd < 0.0) {
        throw ValidationError("synthetic spec: negative noise_sd");
    }
    if (spec.missing_prob < 0.0 || spec.missing_prob >= 1.0) {
        throw ValidationError("synthetic spec: missing_prob must lie in [0, 1)");
    }

    std::vector<double> bias = spec.bias.empty() ? std::vector<double>(m, 0.0) : spec.bias;
    std::vector<double> spread = spec.spread.empty() ? std::vector<double>(m, 1.0) : spec.spread;

    const double k = static_cast<double>(spec.scale_max);
    const double midpoint = 0.5 * (1.0 + k);

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> truth_dist(1.0, k);
    std::normal_distribution<double> noise_dist(0.0, spec.noise_sd > 0.0 ? spec.noise_sd : 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> truth(n);
    for (std::size_t j = 0; j < n; ++j) truth[j] = truth_dist(rng);

    // One pass per cell in row-major order; draw order is part of the
    // reproducibility contract for a given build.
    std::vector<int> ratings(m * n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double value = spread[i] * (truth[j] - midpoint) + midpoint + bias[i];
            if (spec.noise_sd > 0.0) value += noise_dist(rng);
            long rounded = std::lround(value);
            rounded = std::clamp(rounded, 1L, static_cast<long>(spec.scale_max));
            int rating = static_cast<int>(rounded);
            if (spec.missing_prob > 0.0 && unit(rng) < spec.missing_prob) rating = 0;
            ratings[i * n + j] = rating;
        }
    }

    return SyntheticData{AnnotationMatrix(std::move(ratings), m, n, spec.scale_max),
                         std::move(truth)};
}

}  // namespace likert
