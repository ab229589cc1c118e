#pragma once

#include <string>
#include <vector>

#include "likert/annotation_matrix.hpp"
#include "likert/baseline.hpp"
#include "likert/embedding.hpp"

namespace likert::cli {

// Three stacked panels: the annotation matrix as a heat grid, then the
// score curves ordered by the mean baseline, then ordered by the denoised
// value. Mean curve in blue, denoised in red.
std::string denoise_figure(const AnnotationMatrix& matrix, const BaselineScores& baseline,
                           const DenoisedResult& result);

// One panel of independently sorted score curves, the discrimination view:
// flat runs are ties a method cannot break.
std::string evaluate_figure(const AnnotationMatrix& matrix, const BaselineScores& baseline,
                            const DenoisedResult& result);

}  // namespace likert::cli
