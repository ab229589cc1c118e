#pragma once

// Umbrella header for the likert denoising library.

#include "likert/annotation_matrix.hpp"
#include "likert/baseline.hpp"
#include "likert/dense.hpp"
#include "likert/embedding.hpp"
#include "likert/errors.hpp"
#include "likert/graph.hpp"
#include "likert/linalg.hpp"
#include "likert/synthetic.hpp"
