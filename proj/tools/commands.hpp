#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "likert/embedding.hpp"
#include "likert/synthetic.hpp"

namespace likert::cli {

struct RunConfig {
    std::string input_path;
    int scale_max = 0;
    FlipMode flip = FlipMode::automatic;
    SelectionMode selection = SelectionMode::paper;
    RidgeSetting ridge = RidgeSetting::auto_ridge();
    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};
    std::string truth_path;  // evaluate only
    bool transpose = false;
    int verbosity = 0;
};

void run_denoise(const RunConfig& config);
void run_graph(const RunConfig& config);
void run_simulate(const RunConfig& config, const SyntheticSpec& spec);
void run_evaluate(const RunConfig& config);

// "auto" | "off" | a positive number.
RidgeSetting parse_ridge(const std::string& text);
FlipMode parse_flip(const std::string& text);
SelectionMode parse_selection(const std::string& text);

// Comma-separated doubles; a single value broadcasts to `count` entries.
std::vector<double> parse_double_list(const std::string& text, std::size_t count,
                                      const std::string& flag_name);

}  // namespace likert::cli
