#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "likert/dense.hpp"

namespace likert {

// m x n grid of Likert ratings. Rows are annotators, columns are datapoints,
// entries run 0..scale_max where 0 means "this annotator did not rate this
// datapoint". Immutable after construction; share freely across threads.
class AnnotationMatrix {
public:
    // Validates every invariant: shape (m >= 1, n >= 2), bounds
    // (0 <= rating <= scale_max, scale_max >= 2), label lengths and
    // uniqueness. Empty id lists get synthesized labels "a1..am" / "d1..dn".
    AnnotationMatrix(std::vector<int> ratings, std::size_t n_annotators,
                     std::size_t n_datapoints, int scale_max,
                     std::vector<std::string> annotator_ids = {},
                     std::vector<std::string> datapoint_ids = {});

    std::size_t annotators() const { return m_; }
    std::size_t datapoints() const { return n_; }
    int scale_max() const { return scale_max_; }

    int operator()(std::size_t annotator, std::size_t datapoint) const {
        return ratings_[annotator * n_ + datapoint];
    }

    // Column j exactly as stored, zeros included. Throws std::out_of_range.
    std::vector<int> column(std::size_t j) const;

    // True exactly where the rating is 0.
    std::vector<std::vector<bool>> missing_mask() const;

    const std::vector<std::string>& annotator_ids() const { return annotator_ids_; }
    const std::vector<std::string>& datapoint_ids() const { return datapoint_ids_; }

    // Ratings as doubles, zeros kept, for the linear-algebra stages.
    Mat to_real() const;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    int scale_max_ = 0;
    std::vector<int> ratings_;  // row-major
    std::vector<std::string> annotator_ids_;
    std::vector<std::string> datapoint_ids_;
};

struct LoadOptions {
    int scale_max = 0;       // required; K >= 2
    bool transpose = false;  // input stored datapoints x annotators
};

// Parses annotation CSV: comma-separated integers, UTF-8, LF or CRLF.
// An optional header row of datapoint ids and an optional first column of
// annotator ids are auto-detected (any non-integer cell outside the corner
// marks the row/column as labels; a non-integer corner cell marks both).
// Blank cells are a parse error, not a missing value; 0 is the only
// missing-value encoding. Errors carry 1-based file coordinates.
AnnotationMatrix load_matrix(std::istream& in, const LoadOptions& opts);
AnnotationMatrix load_matrix(const std::string& text, const LoadOptions& opts);

// Writes the CSV form load_matrix accepts. With labels, the header row
// starts with an empty corner cell.
std::string serialize_matrix(const AnnotationMatrix& matrix, bool with_labels = true);

}  // namespace likert
