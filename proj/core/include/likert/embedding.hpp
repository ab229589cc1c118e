#pragma once

#include <cstddef>
#include <vector>

#include "likert/annotation_matrix.hpp"
#include "likert/graph.hpp"

namespace likert {

enum class SelectionMode {
    paper,        // eigenpair of smallest eigenvalue, no questions asked
    skip_trivial  // smallest eigenpair whose projection actually varies
};

enum class FlipMode {
    automatic,  // negate when Pearson correlation with the mean baseline is negative
    on,         // always negate
    off         // never negate
};

// Ridge applied to the constraint matrix B = X D_avg X^T when its Cholesky
// fails. `automatic` uses 1e-10 * trace(B) / m.
struct RidgeSetting {
    enum class Kind { automatic, fixed, off };

    static RidgeSetting auto_ridge() { return {Kind::automatic, 0.0}; }
    static RidgeSetting fixed(double epsilon) { return {Kind::fixed, epsilon}; }
    static RidgeSetting off() { return {Kind::off, 0.0}; }

    Kind kind = Kind::automatic;
    double value = 0.0;
};

struct SelectionInfo {
    std::size_t chosen_index = 0;  // position in the ascending eigenpair list
    bool skipped_trivial = false;  // some smaller eigenpair was near-constant
    double ridge_epsilon = 0.0;    // 0 when no regularization was needed
};

// The embedding direction with its certificates: the achieved objective
// value and how far a^T B a is from 1.
struct Embedding {
    std::vector<double> direction;     // a, one weight per annotator
    double eigenvalue = 0.0;           // a^T X L_avg X^T a
    double constraint_residual = 0.0;  // |a^T X D_avg X^T a - 1|
    SelectionInfo selection;
};

struct EmbeddingOptions {
    SelectionMode selection = SelectionMode::paper;
    RidgeSetting ridge = RidgeSetting::auto_ridge();
};

struct PipelineOptions {
    SelectionMode selection = SelectionMode::paper;
    RidgeSetting ridge = RidgeSetting::auto_ridge();
    FlipMode flip = FlipMode::automatic;
};

struct Postprocessed {
    bool flipped = false;
    std::vector<double> presentation_scores;  // on [1, scale_max]
    std::vector<int> ranks;                   // 1 = lowest presentation score
};

struct DenoisedResult {
    std::vector<double> raw_scores;  // y = a^T X
    bool flipped = false;
    std::vector<double> presentation_scores;
    std::vector<int> ranks;
    Embedding embedding;
};

// Assembles M = X L_avg X^T and B = X D_avg X^T, solves the generalized
// eigenproblem (retrying once with B + eps*I if B is not positive definite),
// picks the eigenpair per `selection`, and rescales so a^T B a = 1 against
// the unridged B. Throws DegenerateProblem when no usable pair exists.
Embedding solve_embedding(const AnnotationMatrix& matrix, const LaplacianPair& pair,
                          const EmbeddingOptions& options = {});

// y_j = a^T X_{:j}, missing entries contributing their stored zeros.
std::vector<double> project(const AnnotationMatrix& matrix, const Embedding& embedding);

// Flip decision plus the affine map onto [1, scale_max]:
//   p_j = 1 + (K - 1) * (y_j - min y) / (max y - min y),
// constant projections landing on the midpoint (1 + K) / 2. `baseline` is
// consulted only for FlipMode::automatic and may be empty otherwise. Ranks
// ascend with presentation score; ties break by datapoint index.
Postprocessed postprocess(const std::vector<double>& y, int scale_max, FlipMode flip,
                          const std::vector<double>& baseline);

// The whole chain: per-annotator graphs -> averaged Laplacian ->
// solve_embedding -> project -> postprocess.
DenoisedResult denoise_pipeline(const AnnotationMatrix& matrix,
                                const PipelineOptions& options = {});

}  // namespace likert
