#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "artifacts.hpp"
#include "commands.hpp"
#include "likert/errors.hpp"

namespace {

using likert::cli::RunConfig;

struct ErrorReport {
    std::string type;
    std::string message;
    int exit_code = 1;
};

ErrorReport classify(const std::exception& e) {
    if (auto* p = dynamic_cast<const likert::ParseError*>(&e)) {
        return {"ParseError", p->what(), 1};
    }
    if (dynamic_cast<const likert::ValidationError*>(&e)) return {"ValidationError", e.what(), 1};
    if (dynamic_cast<const likert::AllMissingColumn*>(&e)) {
        return {"AllMissingColumn", e.what(), 1};
    }
    if (dynamic_cast<const likert::DimensionError*>(&e)) return {"DimensionError", e.what(), 1};
    if (dynamic_cast<const likert::ZeroVariance*>(&e)) return {"ZeroVariance", e.what(), 1};
    if (dynamic_cast<const likert::DegenerateProblem*>(&e)) {
        return {"DegenerateProblem", e.what(), 2};
    }
    if (dynamic_cast<const likert::NotPositiveDefinite*>(&e)) {
        return {"NotPositiveDefinite", e.what(), 2};
    }
    if (dynamic_cast<const likert::NoConvergence*>(&e)) return {"NoConvergence", e.what(), 2};
    if (dynamic_cast<const likert::cli::IoError*>(&e)) return {"IoError", e.what(), 3};
    if (dynamic_cast<const std::out_of_range*>(&e)) return {"OutOfRange", e.what(), 1};
    return {"Error", e.what(), 1};
}

void add_io_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--input", config.input_path, "annotation CSV to read")->required();
    cmd->add_option("--scale-max", config.scale_max, "Likert scale maximum K (K >= 2)")
        ->required();
    cmd->add_flag("--transpose", config.transpose,
                  "input is stored datapoints x annotators; transpose after parsing");
    cmd->add_option("--out", config.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--format", config.formats, "artifact formats: csv, json, svg")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json", "svg"}));
}

void add_solver_options(CLI::App* cmd, std::string& flip, std::string& selection,
                        std::string& ridge) {
    cmd->add_option("--flip", flip, "orientation fix: auto, on, off")->capture_default_str();
    cmd->add_option("--selection", selection, "eigenpair choice: paper, skip-trivial")
        ->capture_default_str();
    cmd->add_option("--ridge", ridge,
                    "constraint regularization on Cholesky failure: auto, off, or epsilon")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Summarize multi-annotator Likert ratings by a locality-preserving 1-D graph "
        "embedding, with the mean-rating baseline for comparison"};
    app.require_subcommand(1);
    bool error_json = false;
    app.add_flag("--error-json", error_json, "on failure, print machine-readable JSON to stdout");

    RunConfig config;
    std::string flip = "auto";
    std::string selection = "paper";
    std::string ridge = "auto";

    CLI::App* denoise = app.add_subcommand(
        "denoise", "project the datapoints onto one dimension and write scores");
    add_io_options(denoise, config);
    add_solver_options(denoise, flip, selection, ridge);
    denoise->add_flag("-v,--verbose", config.verbosity, "print solver provenance");

    CLI::App* graph =
        app.add_subcommand("graph", "dump the averaged adjacency, degrees, and Laplacian");
    add_io_options(graph, config);

    CLI::App* simulate =
        app.add_subcommand("simulate", "generate a synthetic biased-annotator matrix");
    likert::SyntheticSpec spec;
    std::string bias_text = "0";
    std::string spread_text = "1";
    simulate->add_option("--annotators", spec.n_annotators, "number of annotators (rows)")
        ->required();
    simulate->add_option("--datapoints", spec.n_datapoints, "number of datapoints (columns)")
        ->required();
    simulate->add_option("--scale-max", spec.scale_max, "Likert scale maximum K")
        ->capture_default_str();
    simulate->add_option("--bias", bias_text,
                         "per-annotator rating offset (single value or comma list)")
        ->capture_default_str();
    simulate->add_option("--spread", spread_text,
                         "per-annotator range multiplier (single value or comma list)")
        ->capture_default_str();
    simulate->add_option("--noise-sd", spec.noise_sd, "gaussian noise standard deviation")
        ->capture_default_str();
    simulate->add_option("--missing-prob", spec.missing_prob,
                         "probability a rating is dropped (0 = none)")
        ->capture_default_str();
    simulate->add_option("--seed", spec.seed, "random seed")->capture_default_str();
    simulate->add_option("--out", config.out_dir, "output directory")->capture_default_str();

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "compare the denoised scores against the mean baseline");
    add_io_options(evaluate, config);
    add_solver_options(evaluate, flip, selection, ridge);
    evaluate->add_option("--truth", config.truth_path,
                         "ground-truth CSV (datapoint_id,truth) for vs-truth correlations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        config.flip = likert::cli::parse_flip(flip);
        config.selection = likert::cli::parse_selection(selection);
        config.ridge = likert::cli::parse_ridge(ridge);
        if (config.scale_max != 0 && config.scale_max < 2) {
            throw likert::ValidationError("--scale-max must be at least 2");
        }

        if (denoise->parsed()) {
            likert::cli::run_denoise(config);
        } else if (graph->parsed()) {
            likert::cli::run_graph(config);
        } else if (simulate->parsed()) {
            spec.bias = likert::cli::parse_double_list(bias_text, spec.n_annotators, "--bias");
            spec.spread =
                likert::cli::parse_double_list(spread_text, spec.n_annotators, "--spread");
            likert::cli::run_simulate(config, spec);
        } else if (evaluate->parsed()) {
            likert::cli::run_evaluate(config);
        }
    } catch (const std::exception& e) {
        const ErrorReport report = classify(e);
        if (error_json) {
            nlohmann::json j = {{"error",
                                 {{"type", report.type},
                                  {"message", report.message},
                                  {"exit_code", report.exit_code}}}};
            std::cout << j.dump(2) << "\n";
        }
        std::cerr << "error (" << report.type << "): " << report.message << "\n";
        return report.exit_code;
    }
    return 0;
}
