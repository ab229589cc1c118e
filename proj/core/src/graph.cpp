#include "likert/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "likert/errors.hpp"

namespace likert {

AnnotatorGraph build_annotator_graph(const AnnotationMatrix& matrix, std::size_t annotator) {
    if (annotator >= matrix.annotators()) {
        throw std::out_of_range("annotator index " + std::to_string(annotator) +
                                " out of range [0, " + std::to_string(matrix.annotators()) + ")");
    }
    const std::size_t n = matrix.datapoints();
    AnnotatorGraph graph{Mat(n, n), annotator};
    for (std::size_t i = 0; i < n; ++i) {
        const int ri = matrix(annotator, i);
        if (ri == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix(annotator, j) == ri) {
                graph.adjacency(i, j) = 1.0;
                graph.adjacency(j, i) = 1.0;
            }
        }
    }
    return graph;
}

std::vector<AnnotatorGraph> build_all_graphs(const AnnotationMatrix& matrix) {
    std::vector<AnnotatorGraph> graphs;
    graphs.reserve(matrix.annotators());
    for (std::size_t i = 0; i < matrix.annotators(); ++i) {
        graphs.push_back(build_annotator_graph(matrix, i));
    }
    return graphs;
}

LaplacianPair average_graphs(std::span<const AnnotatorGraph> graphs) {
    if (graphs.empty()) throw ValidationError("average_graphs: empty graph list");
    const std::size_t n = graphs.front().adjacency.rows();
    for (const AnnotatorGraph& g : graphs) {
        if (g.adjacency.rows() != n || g.adjacency.cols() != n) {
            throw DimensionError("average_graphs: graph for annotator " +
                                 std::to_string(g.annotator_index) + " is " +
                                 std::to_string(g.adjacency.rows()) + "x" +
                                 std::to_string(g.adjacency.cols()) + ", expected " +
                                 std::to_string(n) + "x" + std::to_string(n));
        }
    }

    // Sum first, divide once: the summands are exact 0/1 values, so the
    // result does not depend on the order of the list.
    LaplacianPair pair{Mat(n, n), std::vector<double>(n, 0.0), Mat(n, n)};
    for (const AnnotatorGraph& g : graphs) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                pair.avg_adjacency(i, j) += g.adjacency(i, j);
            }
        }
    }
    const double inv_m = 1.0 / static_cast<double>(graphs.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pair.avg_adjacency(i, j) *= inv_m;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        double degree = 0.0;
        for (std::size_t j = 0; j < n; ++j) degree += pair.avg_adjacency(i, j);
        pair.avg_degree[i] = degree;
        pair.laplacian(i, i) = degree;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pair.laplacian(i, j) -= pair.avg_adjacency(i, j);
        }
    }
    return pair;
}

GraphStats graph_stats(const LaplacianPair& pair) {
    const std::size_t n = pair.avg_adjacency.rows();
    GraphStats stats;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pair.avg_adjacency(i, j) > 0.0) ++stats.edge_count;
        }
    }

    double degree_sum = 0.0;
    stats.min_degree = n > 0 ? pair.avg_degree[0] : 0.0;
    stats.max_degree = stats.min_degree;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = pair.avg_degree[i];
        degree_sum += d;
        stats.min_degree = std::min(stats.min_degree, d);
        stats.max_degree = std::max(stats.max_degree, d);
        if (d == 0.0) ++stats.isolated_vertices;
    }
    stats.mean_degree = n > 0 ? degree_sum / static_cast<double>(n) : 0.0;

    // Connected components of the support graph, plain BFS.
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        if (visited[s]) continue;
        ++stats.components;
        visited[s] = true;
        queue.assign(1, s);
        while (!queue.empty()) {
            const std::size_t u = queue.back();
            queue.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (!visited[w] && pair.avg_adjacency(u, w) > 0.0) {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return stats;
}

}  // namespace likert
