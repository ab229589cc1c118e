#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "likert/baseline.hpp"
#include "likert/dense.hpp"
#include "likert/embedding.hpp"

namespace likert::cli {

// Filesystem trouble: missing input, unwritable output. Maps to exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

// Temp file in the target directory plus rename, so partial runs never
// leave a truncated artifact behind.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string matrix_csv(const Mat& matrix);
std::string degree_csv(const std::vector<double>& degrees);

std::string scores_csv(const AnnotationMatrix& matrix, const BaselineScores& baseline,
                       const DenoisedResult& result);

std::string truth_csv(const std::vector<std::string>& datapoint_ids,
                      const std::vector<double>& truth);

// Parses the two-column file truth_csv writes (header tolerated).
std::vector<double> parse_truth_csv(const std::string& text);

}  // namespace likert::cli
