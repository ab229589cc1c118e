#include "artifacts.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "likert/errors.hpp"
#include "likert/format.hpp"

namespace likert::cli {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading " + path.string());
    return buffer.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                          ec.message());
        }
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("failed while writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move " + tmp.string() + " into place: " + path.string());
    }
}

std::string matrix_csv(const Mat& matrix) {
    std::string out;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_double(matrix(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string degree_csv(const std::vector<double>& degrees) {
    Mat diag(degrees.size(), degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) diag(i, i) = degrees[i];
    return matrix_csv(diag);
}

std::string scores_csv(const AnnotationMatrix& matrix, const BaselineScores& baseline,
                       const DenoisedResult& result) {
    std::string out = "datapoint_id,mean,count,raw_score,presentation_score,rank\n";
    for (std::size_t j = 0; j < matrix.datapoints(); ++j) {
        out += matrix.datapoint_ids()[j];
        out += ',';
        out += format_double(baseline.means[j]);
        out += ',';
        out += std::to_string(baseline.counts[j]);
        out += ',';
        out += format_double(result.raw_scores[j]);
        out += ',';
        out += format_double(result.presentation_scores[j]);
        out += ',';
        out += std::to_string(result.ranks[j]);
        out += '\n';
    }
    return out;
}

std::string truth_csv(const std::vector<std::string>& datapoint_ids,
                      const std::vector<double>& truth) {
    std::string out = "datapoint_id,truth\n";
    for (std::size_t j = 0; j < truth.size(); ++j) {
        out += datapoint_ids[j];
        out += ',';
        out += format_double(truth[j]);
        out += '\n';
    }
    return out;
}

std::vector<double> parse_truth_csv(const std::string& text) {
    std::vector<double> truth;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t comma = line.rfind(',');
        const std::string cell = comma == std::string::npos ? line : line.substr(comma + 1);
        try {
            std::size_t used = 0;
            const double value = std::stod(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            truth.push_back(value);
        } catch (const std::exception&) {
            if (line_no == 1) continue;  // header row
            throw ParseError("truth file: cell \"" + cell + "\" at row " +
                                 std::to_string(line_no) + " is not a number",
                             line_no, 2);
        }
    }
    if (truth.empty()) throw ParseError("truth file: no numeric rows", 1, 1);
    return truth;
}

}  // namespace likert::cli
