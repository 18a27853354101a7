#include "qprep/io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qprep::io {

namespace {

constexpr double kLoadNormTol = 1e-6;

json complex_to_json(const cdouble& z) { return json::array({z.real(), z.imag()}); }

cdouble complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("complex value must be a [re, im] pair");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

json to_json(const StateVector& state) {
    json amps = json::array();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        amps.push_back(complex_to_json(state.amplitude(i)));
    }
    return json{{"n", state.n_qubits()}, {"amplitudes", std::move(amps)}};
}

json to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < rho.matrix().rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < rho.matrix().cols(); ++c) {
            row.push_back(complex_to_json(rho.matrix()(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", rho.n_qubits()}, {"matrix", std::move(rows)}};
}

json to_json(const DickeCoordinates& coords) {
    json coeffs = json::array();
    for (Eigen::Index k = 0; k < coords.coeffs.size(); ++k) {
        coeffs.push_back(complex_to_json(coords.coeffs(k)));
    }
    return json{{"n", coords.n_qubits},
                {"coeffs", std::move(coeffs)},
                {"residual_norm", coords.residual_norm}};
}

json to_json(const SymmetryReport& report) {
    return json{{"n", report.n_qubits},
                {"overlap", report.overlap},
                {"realizable", report.realizable},
                {"tolerance_used", report.tolerance_used}};
}

json to_json(const EntropyBudget& budget) {
    return json{{"n", budget.n_qubits},
                {"entropy_before_bits", budget.entropy_before_bits},
                {"entropy_after_bits", budget.entropy_after_bits},
                {"delta_bits", budget.delta_bits},
                {"temperature_kelvin", budget.temperature_kelvin},
                {"energy_joules", budget.energy_joules}};
}

json to_json(const AssemblyReport& report) {
    return json{{"register_state", to_json(report.register_state)},
                {"purity", report.purity},
                {"entropy_bits", report.entropy_bits},
                {"fidelity_to_target", report.fidelity_to_target},
                {"target", to_json(report.target)}};
}

json to_json(const DelayStats& stats) {
    json hist = json::object();
    for (const auto& [rounds, count] : stats.histogram) {
        hist[std::to_string(rounds)] = count;
    }
    return json{{"mean_rounds", stats.mean_rounds},
                {"variance", stats.variance},
                {"histogram", std::move(hist)},
                {"analytic_mean", stats.analytic_mean},
                {"mean_visibility", stats.mean_visibility}};
}

json to_json(const ComparisonReport& report) {
    return json{{"assembly", to_json(report.assembly)},
                {"symmetry", to_json(report.symmetry)},
                {"budget", to_json(report.budget)}};
}

LoadedState state_from_json(const json& j) {
    if (j.is_object() && !j.contains("amplitudes")) {
        // Accept report envelopes and symmetrize-style results transparently.
        if (j.contains("results")) return state_from_json(j.at("results"));
        if (j.contains("state")) return state_from_json(j.at("state"));
    }
    const int n = j.at("n").get<int>();
    const json& amps_json = j.at("amplitudes");
    if (!amps_json.is_array()) {
        throw std::invalid_argument("amplitudes must be an array of [re, im] pairs");
    }
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(amps_json.size()));
    for (std::size_t i = 0; i < amps_json.size(); ++i) {
        amps(static_cast<Eigen::Index>(i)) = complex_from_json(amps_json.at(i));
    }

    const double deviation = std::abs(amps.norm() - 1.0);
    if (deviation > kLoadNormTol) {
        throw std::invalid_argument("state file norm deviates from 1 by " +
                                    std::to_string(deviation) + ", beyond 1e-6");
    }
    const bool renormalize = deviation > kNormTol;
    if (renormalize) {
        amps /= amps.norm();
    }
    return LoadedState{StateVector(n, std::move(amps)), renormalize, deviation};
}

PipelineConfig pipeline_config_from_json(const json& j) {
    PipelineConfig config;
    config.n_qubits = j.at("n_qubits").get<int>();
    config.pass_probability = j.at("pass_probability").get<double>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "sequential") {
        config.mode = RetryMode::kSequential;
    } else if (mode == "parallel-retry") {
        config.mode = RetryMode::kParallelRetry;
    } else {
        throw std::invalid_argument("mode must be \"sequential\" or \"parallel-retry\"");
    }
    config.trials = j.at("trials").get<std::int64_t>();
    config.seed = j.value("seed", std::uint64_t{0});
    config.visibility_decay = j.value("visibility_decay", 1.0);
    return config;
}

std::vector<SourceModel> sources_from_json(const json& j) {
    const json& list = j.contains("sources") ? j.at("sources") : j;
    if (!list.is_array() || list.empty()) {
        throw std::invalid_argument("config needs a nonempty \"sources\" array");
    }
    std::vector<SourceModel> sources;
    sources.reserve(list.size());
    for (const json& s : list) {
        QubitSpec spec(s.at("alpha").get<double>(), s.at("beta").get<double>(),
                       s.at("theta1").get<double>(), s.at("theta2").get<double>());
        sources.emplace_back(spec, s.at("visibility").get<double>(),
                             s.value("seed", std::uint64_t{0}));
    }
    return sources;
}

json to_json(const ReportEnvelope& envelope) {
    json j{{"command", envelope.command},
           {"parameters", envelope.parameters},
           {"results", envelope.results},
           {"artifact_version", envelope.artifact_version}};
    if (envelope.seed) {
        j["seed"] = *envelope.seed;
    }
    return j;
}

ReportEnvelope envelope_from_json(const json& j) {
    ReportEnvelope envelope;
    envelope.command = j.at("command").get<std::string>();
    envelope.parameters = j.at("parameters");
    envelope.results = j.at("results");
    envelope.artifact_version = j.at("artifact_version").get<std::string>();
    if (j.contains("seed")) {
        envelope.seed = j.at("seed").get<std::uint64_t>();
    }
    return envelope;
}

std::string histogram_csv(const DelayStats& stats) {
    std::ostringstream out;
    out << "rounds,count\n";
    for (const auto& [rounds, count] : stats.histogram) {
        out << rounds << "," << count << "\n";
    }
    return out.str();
}

}  // namespace qprep::io
