#include "likert/annotation_matrix.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "likert/errors.hpp"

namespace likert {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

bool parse_int(const std::string& cell, long long& out) {
    if (cell.empty()) return false;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool is_int(const std::string& cell) {
    long long ignored = 0;
    return parse_int(cell, ignored);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

void check_unique(const std::vector<std::string>& ids, const char* what) {
    std::unordered_set<std::string> seen;
    for (const std::string& id : ids) {
        if (!seen.insert(id).second) {
            throw ValidationError(std::string(what) + " id \"" + id + "\" appears more than once");
        }
    }
}

}  // namespace

AnnotationMatrix::AnnotationMatrix(std::vector<int> ratings, std::size_t n_annotators,
                                   std::size_t n_datapoints, int scale_max,
                                   std::vector<std::string> annotator_ids,
                                   std::vector<std::string> datapoint_ids)
    : m_(n_annotators),
      n_(n_datapoints),
      scale_max_(scale_max),
      ratings_(std::move(ratings)),
      annotator_ids_(std::move(annotator_ids)),
      datapoint_ids_(std::move(datapoint_ids)) {
    if (scale_max_ < 2) {
        throw ValidationError("scale_max must be at least 2, got " + std::to_string(scale_max_));
    }
    if (m_ < 1) throw ValidationError("need at least 1 annotator");
    if (n_ < 2) throw ValidationError("need at least 2 datapoints, got " + std::to_string(n_));
    if (ratings_.size() != m_ * n_) {
        throw ValidationError("ratings size " + std::to_string(ratings_.size()) +
                              " does not match " + std::to_string(m_) + "x" + std::to_string(n_));
    }
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const int r = ratings_[i * n_ + j];
            if (r < 0 || r > scale_max_) {
                throw ValidationError("rating " + std::to_string(r) + " at row " +
                                      std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                                      " outside [0, " + std::to_string(scale_max_) + "]");
            }
        }
    }
    if (annotator_ids_.empty()) {
        annotator_ids_.reserve(m_);
        for (std::size_t i = 0; i < m_; ++i) annotator_ids_.push_back("a" + std::to_string(i + 1));
    }
    if (datapoint_ids_.empty()) {
        datapoint_ids_.reserve(n_);
        for (std::size_t j = 0; j < n_; ++j) datapoint_ids_.push_back("d" + std::to_string(j + 1));
    }
    if (annotator_ids_.size() != m_) {
        throw ValidationError("expected " + std::to_string(m_) + " annotator ids, got " +
                              std::to_string(annotator_ids_.size()));
    }
    if (datapoint_ids_.size() != n_) {
        throw ValidationError("expected " + std::to_string(n_) + " datapoint ids, got " +
                              std::to_string(datapoint_ids_.size()));
    }
    check_unique(annotator_ids_, "annotator");
    check_unique(datapoint_ids_, "datapoint");
}

std::vector<int> AnnotationMatrix::column(std::size_t j) const {
    if (j >= n_) {
        throw std::out_of_range("column index " + std::to_string(j) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
    std::vector<int> col(m_);
    for (std::size_t i = 0; i < m_; ++i) col[i] = ratings_[i * n_ + j];
    return col;
}

std::vector<std::vector<bool>> AnnotationMatrix::missing_mask() const {
    std::vector<std::vector<bool>> mask(m_, std::vector<bool>(n_, false));
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            mask[i][j] = ratings_[i * n_ + j] == 0;
        }
    }
    return mask;
}

Mat AnnotationMatrix::to_real() const {
    Mat x(m_, n_);
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            x(i, j) = static_cast<double>(ratings_[i * n_ + j]);
        }
    }
    return x;
}

AnnotationMatrix load_matrix(std::istream& in, const LoadOptions& opts) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_matrix(buffer.str(), opts);
}

AnnotationMatrix load_matrix(const std::string& text, const LoadOptions& opts) {
    if (opts.scale_max < 2) {
        throw ValidationError("scale_max must be at least 2, got " +
                              std::to_string(opts.scale_max));
    }

    // Split into lines, tolerating CRLF and trailing newlines.
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string line =
            nl == std::string::npos ? text.substr(start) : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("empty input", 1, 1);

    std::vector<std::vector<std::string>> grid;
    grid.reserve(lines.size());
    for (const std::string& line : lines) grid.push_back(split_cells(line));

    const std::size_t n_cols = grid[0].size();
    for (std::size_t r = 1; r < grid.size(); ++r) {
        if (grid[r].size() != n_cols) {
            throw ParseError("row " + std::to_string(r + 1) + " has " +
                                 std::to_string(grid[r].size()) + " cells, expected " +
                                 std::to_string(n_cols),
                             r + 1, 1);
        }
    }

    // Label auto-detection: a non-integer cell in the first row (past the
    // corner) marks a header of datapoint ids; a non-integer cell in the
    // first column of the remaining rows marks annotator labels.
    bool has_header = false;
    for (std::size_t c = 1; c < n_cols; ++c) {
        if (!is_int(grid[0][c])) {
            has_header = true;
            break;
        }
    }
    bool has_labels = false;
    for (std::size_t r = has_header ? 1 : 0; r < grid.size(); ++r) {
        if (!is_int(grid[r][0])) {
            has_labels = true;
            break;
        }
    }

    const std::size_t row0 = has_header ? 1 : 0;
    const std::size_t col0 = has_labels ? 1 : 0;
    const std::size_t n_data_rows = grid.size() - row0;
    const std::size_t n_data_cols = n_cols - col0;
    if (n_data_rows < 1) throw ParseError("no data rows", 1, 1);
    if (n_data_cols < 2) {
        throw ParseError("need at least 2 data columns, got " + std::to_string(n_data_cols), 1, 1);
    }

    std::vector<std::string> datapoint_ids;
    if (has_header) {
        datapoint_ids.assign(grid[0].begin() + static_cast<std::ptrdiff_t>(col0), grid[0].end());
    }
    std::vector<std::string> annotator_ids;
    if (has_labels) {
        annotator_ids.reserve(n_data_rows);
        for (std::size_t r = row0; r < grid.size(); ++r) annotator_ids.push_back(grid[r][0]);
    }

    std::vector<int> ratings;
    ratings.reserve(n_data_rows * n_data_cols);
    for (std::size_t r = 0; r < n_data_rows; ++r) {
        for (std::size_t c = 0; c < n_data_cols; ++c) {
            const std::string& cell = grid[r + row0][c + col0];
            const std::size_t file_row = r + row0 + 1;
            const std::size_t file_col = c + col0 + 1;
            long long value = 0;
            if (!parse_int(cell, value)) {
                throw ParseError("cell \"" + cell + "\" at row " + std::to_string(file_row) +
                                     ", column " + std::to_string(file_col) +
                                     " is not an integer",
                                 file_row, file_col);
            }
            if (value < 0 || value > opts.scale_max) {
                throw ParseError("rating " + std::to_string(value) + " at row " +
                                     std::to_string(file_row) + ", column " +
                                     std::to_string(file_col) + " outside [0, " +
                                     std::to_string(opts.scale_max) + "]",
                                 file_row, file_col);
            }
            ratings.push_back(static_cast<int>(value));
        }
    }

    std::size_t m = n_data_rows;
    std::size_t n = n_data_cols;
    if (opts.transpose) {
        std::vector<int> flipped(ratings.size());
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                flipped[j * m + i] = ratings[i * n + j];
            }
        }
        ratings = std::move(flipped);
        std::swap(m, n);
        std::swap(annotator_ids, datapoint_ids);
    }

    return AnnotationMatrix(std::move(ratings), m, n, opts.scale_max, std::move(annotator_ids),
                            std::move(datapoint_ids));
}

std::string serialize_matrix(const AnnotationMatrix& matrix, bool with_labels) {
    std::string out;
    if (with_labels) {
        for (const std::string& id : matrix.datapoint_ids()) {
            out += ',';
            out += id;
        }
        out += '\n';
    }
    for (std::size_t i = 0; i < matrix.annotators(); ++i) {
        if (with_labels) out += matrix.annotator_ids()[i];
        for (std::size_t j = 0; j < matrix.datapoints(); ++j) {
            if (with_labels || j > 0) out += ',';
            out += std::to_string(matrix(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace likert
