// qprep: command-line surface over the register-preparation simulator.
// Every command emits a JSON report envelope (or CSV where requested) on
// stdout or --output; warnings go to stderr so stdout stays parseable.
//
// Exit codes: 0 success (and affirmative verdicts), 1 negative
// realizability verdict, 2 usage or domain errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qprep/assembly.hpp"
#include "qprep/io.hpp"
#include "qprep/statespace.hpp"
#include "qprep/symmetry.hpp"
#include "qprep/thermo.hpp"

namespace {

using qprep::io::json;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << text;
}

void emit_envelope(qprep::io::ReportEnvelope envelope, const std::string& path) {
    envelope.artifact_version = QPREP_VERSION;
    write_output(qprep::io::to_json(envelope).dump(2) + "\n", path);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    return json::parse(in);
}

qprep::StateVector load_state(const std::string& path) {
    const auto loaded = qprep::io::state_from_json(load_json_file(path));
    if (loaded.renormalized) {
        std::cerr << "warning: input state norm deviated from 1 by "
                  << loaded.norm_deviation << "; renormalized\n";
    }
    return loaded.state;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Register-preparation statistics simulator"};
    app.set_version_flag("--version", QPREP_VERSION);
    app.require_subcommand(1);

    // dicke
    int dicke_n = 0;
    int dicke_k = 0;
    std::string dicke_output;
    auto* cmd_dicke = app.add_subcommand(
        "dicke", "Equal-weight superposition of all basis strings of one Hamming weight");
    cmd_dicke->add_option("--n", dicke_n, "Register size")->required();
    cmd_dicke->add_option("--k", dicke_k, "Hamming weight")->required();
    cmd_dicke->add_option("--output", dicke_output, "Output path (default stdout)");

    // symmetrize
    std::string symmetrize_input;
    std::string symmetrize_output;
    auto* cmd_symmetrize = app.add_subcommand(
        "symmetrize", "Project a state file onto the symmetric subspace");
    cmd_symmetrize->add_option("--input", symmetrize_input, "State-vector JSON file")
        ->required();
    cmd_symmetrize->add_option("--output", symmetrize_output, "Output path (default stdout)");

    // realizable
    std::string realizable_input;
    std::string realizable_output;
    double realizable_tolerance = qprep::kRealizableDefaultTol;
    auto* cmd_realizable = app.add_subcommand(
        "realizable", "Check whether a state lies inside the symmetric subspace");
    cmd_realizable->add_option("--input", realizable_input, "State-vector JSON file")
        ->required();
    cmd_realizable->add_option("--tolerance", realizable_tolerance,
                               "Allowed overlap deficit, in (0, 0.1]");
    cmd_realizable->add_option("--output", realizable_output, "Output path (default stdout)");

    // budget
    int budget_n = 0;
    double budget_temp = 0.0;
    std::string budget_output;
    auto* cmd_budget = app.add_subcommand(
        "budget", "Entropy reduction and energy cost of coherent initialization");
    cmd_budget->add_option("--n", budget_n, "Register size")->required();
    cmd_budget->add_option("--temp", budget_temp, "Temperature in kelvin")->required();
    cmd_budget->add_option("--output", budget_output, "Output path (default stdout)");

    // assemble
    std::string assemble_config;
    std::string assemble_output;
    auto* cmd_assemble = app.add_subcommand(
        "assemble", "Assemble independent sources into a register and report diagnostics");
    cmd_assemble->add_option("--config", assemble_config, "Sources JSON file")->required();
    cmd_assemble->add_option("--output", assemble_output, "Output path (default stdout)");

    // pipeline
    std::string pipeline_config_path;
    std::string pipeline_output;
    std::string pipeline_format = "json";
    std::optional<std::uint64_t> pipeline_seed;
    auto* cmd_pipeline = app.add_subcommand(
        "pipeline", "Monte Carlo of the test-and-retry preparation delay");
    cmd_pipeline->add_option("--config", pipeline_config_path, "Pipeline JSON file")
        ->required();
    cmd_pipeline->add_option("--seed", pipeline_seed, "Override the config seed");
    cmd_pipeline->add_option("--format", pipeline_format, "json or csv (histogram)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_pipeline->add_option("--output", pipeline_output, "Output path (default stdout)");

    // compare
    int compare_n = 0;
    double compare_visibility = 1.0;
    double compare_temp = 0.0;
    std::string compare_output;
    auto* cmd_compare = app.add_subcommand(
        "compare", "Joint assembly / symmetry / entropy-budget report");
    cmd_compare->add_option("--n", compare_n, "Register size")->required();
    cmd_compare->add_option("--visibility", compare_visibility, "Source visibility in [0, 1]")
        ->required();
    cmd_compare->add_option("--temp", compare_temp, "Temperature in kelvin")->required();
    cmd_compare->add_option("--output", compare_output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_dicke->parsed()) {
            const auto state = qprep::dicke(dicke_n, dicke_k);
            emit_envelope({.command = "dicke",
                           .parameters = {{"n", dicke_n}, {"k", dicke_k}},
                           .results = qprep::io::to_json(state)},
                          dicke_output);
        } else if (cmd_symmetrize->parsed()) {
            const auto state = load_state(symmetrize_input);
            const auto [projected, overlap] = qprep::symmetrize(state);
            emit_envelope({.command = "symmetrize",
                           .parameters = {{"input", symmetrize_input}},
                           .results = {{"state", qprep::io::to_json(projected)},
                                       {"overlap", overlap}}},
                          symmetrize_output);
        } else if (cmd_realizable->parsed()) {
            const auto state = load_state(realizable_input);
            const auto report = qprep::check_realizable(state, realizable_tolerance);
            emit_envelope({.command = "realizable",
                           .parameters = {{"input", realizable_input},
                                          {"tolerance", realizable_tolerance}},
                           .results = qprep::io::to_json(report)},
                          realizable_output);
            return report.realizable ? 0 : 1;
        } else if (cmd_budget->parsed()) {
            const auto budget = qprep::budget_for_register(budget_n, budget_temp);
            emit_envelope({.command = "budget",
                           .parameters = {{"n", budget_n}, {"temperature", budget_temp}},
                           .results = qprep::io::to_json(budget)},
                          budget_output);
        } else if (cmd_assemble->parsed()) {
            const json config = load_json_file(assemble_config);
            const auto report = qprep::assemble(qprep::io::sources_from_json(config));
            emit_envelope({.command = "assemble",
                           .parameters = {{"config_path", assemble_config},
                                          {"config", config}},
                           .results = qprep::io::to_json(report)},
                          assemble_output);
        } else if (cmd_pipeline->parsed()) {
            const json config_json = load_json_file(pipeline_config_path);
            auto config = qprep::io::pipeline_config_from_json(config_json);
            if (pipeline_seed) {
                config.seed = *pipeline_seed;
            }
            const auto stats = qprep::delay_simulate(config);
            if (pipeline_format == "csv") {
                write_output(qprep::io::histogram_csv(stats), pipeline_output);
            } else {
                json config_echo = config_json;
                config_echo["seed"] = config.seed;
                emit_envelope({.command = "pipeline",
                               .parameters = {{"config_path", pipeline_config_path},
                                              {"config", config_echo}},
                               .results = qprep::io::to_json(stats),
                               .seed = config.seed},
                              pipeline_output);
            }
        } else if (cmd_compare->parsed()) {
            const auto report =
                qprep::compare_pictures(compare_n, compare_visibility, compare_temp);
            emit_envelope({.command = "compare",
                           .parameters = {{"n", compare_n},
                                          {"visibility", compare_visibility},
                                          {"temperature", compare_temp}},
                           .results = qprep::io::to_json(report)},
                          compare_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
