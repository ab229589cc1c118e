#pragma once

#include <cstdint>
#include <vector>

#include "likert/annotation_matrix.hpp"

namespace likert {

// Biased-annotator generator. Truth values are continuous uniform on
// [1, K]; annotator i reports
//   clamp(round(spread_i * (truth_j - mid) + mid + bias_i + N(0, noise_sd)), 1, K)
// with mid = (1 + K) / 2, and the cell is then dropped to 0 with
// probability missing_prob. Fully deterministic for a fixed seed.
struct SyntheticSpec {
    std::size_t n_annotators = 0;
    std::size_t n_datapoints = 0;
    int scale_max = 7;
    std::vector<double> bias;    // per annotator; empty = all zero
    std::vector<double> spread;  // per annotator; empty = all one
    double noise_sd = 0.0;
    double missing_prob = 0.0;   // in [0, 1)
    std::uint64_t seed = 0;
};

struct SyntheticData {
    AnnotationMatrix matrix;
    std::vector<double> truth;  // one value per datapoint
};

// Throws ValidationError on an invalid spec (bad shape, bias/spread length
// not 0 or m, missing_prob outside [0, 1), negative noise_sd).
SyntheticData generate_synthetic(const SyntheticSpec& spec);

}  // namespace likert
