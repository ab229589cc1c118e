#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "artifacts.hpp"
#include "likert/baseline.hpp"
#include "likert/errors.hpp"
#include "likert/format.hpp"
#include "likert/graph.hpp"
#include "svg_plot.hpp"

namespace likert::cli {

namespace {

namespace fs = std::filesystem;

bool wants(const RunConfig& config, const std::string& format) {
    return std::find(config.formats.begin(), config.formats.end(), format) !=
           config.formats.end();
}

AnnotationMatrix load_input(const RunConfig& config) {
    const std::string text = read_file(config.input_path);
    return load_matrix(text, LoadOptions{config.scale_max, config.transpose});
}

void emit(const RunConfig& config, const std::string& name, const std::string& content) {
    const fs::path path = fs::path(config.out_dir) / name;
    atomic_write(path, content);
    std::cout << "wrote " << path.string() << "\n";
}

const char* flip_name(FlipMode mode) {
    switch (mode) {
        case FlipMode::automatic: return "auto";
        case FlipMode::on: return "on";
        case FlipMode::off: return "off";
    }
    return "auto";
}

const char* selection_name(SelectionMode mode) {
    return mode == SelectionMode::paper ? "paper" : "skip-trivial";
}

nlohmann::json embedding_json(const Embedding& embedding, SelectionMode mode) {
    return {
        {"eigenvalue", round_for_output(embedding.eigenvalue)},
        {"constraint_residual", round_for_output(embedding.constraint_residual)},
        {"ridge_epsilon", round_for_output(embedding.selection.ridge_epsilon)},
        {"selection",
         {{"mode", selection_name(mode)},
          {"index", embedding.selection.chosen_index},
          {"skipped_trivial", embedding.selection.skipped_trivial}}},
    };
}

}  // namespace

void run_denoise(const RunConfig& config) {
    const AnnotationMatrix matrix = load_input(config);
    const BaselineScores baseline = mean_baseline(matrix);
    const DenoisedResult result =
        denoise_pipeline(matrix, PipelineOptions{config.selection, config.ridge, config.flip});

    if (config.verbosity > 0) {
        std::cout << "lambda=" << format_double(result.embedding.eigenvalue)
                  << " flipped=" << (result.flipped ? "true" : "false")
                  << " selection_index=" << result.embedding.selection.chosen_index
                  << " ridge_epsilon=" << format_double(result.embedding.selection.ridge_epsilon)
                  << "\n";
    }

    if (wants(config, "csv")) {
        emit(config, "scores.csv", scores_csv(matrix, baseline, result));
    }
    if (wants(config, "json")) {
        nlohmann::json report = {
            {"input",
             {{"path", config.input_path},
              {"annotators", matrix.annotators()},
              {"datapoints", matrix.datapoints()},
              {"scale_max", matrix.scale_max()}}},
            {"embedding", embedding_json(result.embedding, config.selection)},
            {"flip", {{"mode", flip_name(config.flip)}, {"applied", result.flipped}}},
        };
        emit(config, "report.json", report.dump(2) + "\n");
    }
    if (wants(config, "svg")) {
        emit(config, "figure.svg", denoise_figure(matrix, baseline, result));
    }
}

void run_graph(const RunConfig& config) {
    const AnnotationMatrix matrix = load_input(config);
    const std::vector<AnnotatorGraph> graphs = build_all_graphs(matrix);
    const LaplacianPair pair = average_graphs(graphs);
    const GraphStats stats = graph_stats(pair);

    if (wants(config, "csv")) {
        emit(config, "avg_adjacency.csv", matrix_csv(pair.avg_adjacency));
        emit(config, "avg_degree.csv", degree_csv(pair.avg_degree));
        emit(config, "laplacian.csv", matrix_csv(pair.laplacian));
    }
    if (wants(config, "json")) {
        nlohmann::json j = {
            {"annotators", matrix.annotators()},
            {"datapoints", matrix.datapoints()},
            {"edge_count", stats.edge_count},
            {"isolated_vertices", stats.isolated_vertices},
            {"components", stats.components},
            {"degree",
             {{"min", round_for_output(stats.min_degree)},
              {"max", round_for_output(stats.max_degree)},
              {"mean", round_for_output(stats.mean_degree)}}},
        };
        emit(config, "stats.json", j.dump(2) + "\n");
    }
}

void run_simulate(const RunConfig& config, const SyntheticSpec& spec) {
    const SyntheticData data = generate_synthetic(spec);

    emit(config, "matrix.csv", serialize_matrix(data.matrix, true));
    emit(config, "truth.csv", truth_csv(data.matrix.datapoint_ids(), data.truth));

    nlohmann::json echo = {
        {"annotators", spec.n_annotators},
        {"datapoints", spec.n_datapoints},
        {"scale_max", spec.scale_max},
        {"noise_sd", round_for_output(spec.noise_sd)},
        {"missing_prob", round_for_output(spec.missing_prob)},
        {"seed", spec.seed},
    };
    nlohmann::json bias = nlohmann::json::array();
    for (double b : spec.bias) bias.push_back(round_for_output(b));
    nlohmann::json spread = nlohmann::json::array();
    for (double s : spec.spread) spread.push_back(round_for_output(s));
    echo["bias"] = bias;
    echo["spread"] = spread;
    emit(config, "spec.json", echo.dump(2) + "\n");
}

void run_evaluate(const RunConfig& config) {
    const AnnotationMatrix matrix = load_input(config);
    const BaselineScores baseline = mean_baseline(matrix);
    const DenoisedResult result =
        denoise_pipeline(matrix, PipelineOptions{config.selection, config.ridge, config.flip});

    std::optional<std::vector<double>> truth;
    if (!config.truth_path.empty()) {
        truth = parse_truth_csv(read_file(config.truth_path));
    }
    const ComparisonReport report = evaluate(matrix, result, truth);

    if (wants(config, "json")) {
        emit(config, "comparison.json", report.to_json());
    }
    if (wants(config, "svg")) {
        emit(config, "curves.svg", evaluate_figure(matrix, baseline, result));
    }
}

RidgeSetting parse_ridge(const std::string& text) {
    if (text == "auto") return RidgeSetting::auto_ridge();
    if (text == "off") return RidgeSetting::off();
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size() || value <= 0.0) throw std::invalid_argument(text);
        return RidgeSetting::fixed(value);
    } catch (const std::exception&) {
        throw ValidationError("--ridge expects auto, off, or a positive number; got \"" + text +
                              "\"");
    }
}

FlipMode parse_flip(const std::string& text) {
    if (text == "auto") return FlipMode::automatic;
    if (text == "on") return FlipMode::on;
    if (text == "off") return FlipMode::off;
    throw ValidationError("--flip expects auto, on, or off; got \"" + text + "\"");
}

SelectionMode parse_selection(const std::string& text) {
    if (text == "paper") return SelectionMode::paper;
    if (text == "skip-trivial") return SelectionMode::skip_trivial;
    throw ValidationError("--selection expects paper or skip-trivial; got \"" + text + "\"");
}

std::vector<double> parse_double_list(const std::string& text, std::size_t count,
                                      const std::string& flag_name) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw ValidationError(flag_name + ": \"" + cell + "\" is not a number");
        }
    }
    if (values.size() == 1 && count > 1) values.assign(count, values.front());
    if (values.size() != count) {
        throw ValidationError(flag_name + ": expected 1 or " + std::to_string(count) +
                              " comma-separated values, got " + std::to_string(values.size()));
    }
    return values;
}

}  // namespace likert::cli
