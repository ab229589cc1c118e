#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "likert/annotation_matrix.hpp"
#include "likert/dense.hpp"

namespace likert {

// One annotator's equality graph over the datapoints: an edge of weight 1
// joins i and j exactly when the annotator gave both the same nonzero
// rating. Zero diagonal, symmetric.
struct AnnotatorGraph {
    Mat adjacency;
    std::size_t annotator_index = 0;
};

// Elementwise mean of the annotator adjacencies together with its degree
// vector and Laplacian L = D_avg - A_avg.
struct LaplacianPair {
    Mat avg_adjacency;               // entries in [0, 1]
    std::vector<double> avg_degree;  // row sums of avg_adjacency
    Mat laplacian;
};

struct GraphStats {
    std::size_t edge_count = 0;         // support edges of avg_adjacency (i < j)
    std::size_t isolated_vertices = 0;  // degree exactly 0
    std::size_t components = 0;         // connected components of the support graph
    double min_degree = 0.0;
    double max_degree = 0.0;
    double mean_degree = 0.0;
};

AnnotatorGraph build_annotator_graph(const AnnotationMatrix& matrix, std::size_t annotator);

std::vector<AnnotatorGraph> build_all_graphs(const AnnotationMatrix& matrix);

// Divides the elementwise sum by the total annotator count, empty graphs
// included. The 0/1 summands make the result independent of list order.
LaplacianPair average_graphs(std::span<const AnnotatorGraph> graphs);

GraphStats graph_stats(const LaplacianPair& pair);

}  // namespace likert
