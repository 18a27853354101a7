// io.hpp
// JSON serialization for the CLI: state files, report payloads, report
// envelopes, config parsing, and the histogram CSV. Owned by the CLI
// component; the core library stays serialization-free.
//
// State-vector file format: {"n": int, "amplitudes": [[re, im], ...]}
// with amplitudes in basis-index order. Loaders also accept a report
// envelope whose results carry such an object, so command outputs can be
// fed straight back in.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qprep/assembly.hpp"
#include "qprep/statespace.hpp"
#include "qprep/symmetry.hpp"
#include "qprep/thermo.hpp"

namespace qprep::io {

using json = nlohmann::ordered_json;

json to_json(const StateVector& state);
json to_json(const DensityMatrix& rho);
json to_json(const DickeCoordinates& coords);
json to_json(const SymmetryReport& report);
json to_json(const EntropyBudget& budget);
json to_json(const AssemblyReport& report);
json to_json(const DelayStats& stats);
json to_json(const ComparisonReport& report);

// Result of parsing a state file. Norm deviations up to 1e-6 are
// renormalized away (renormalized = true so callers can warn); larger
// deviations are rejected.
struct LoadedState {
    StateVector state;
    bool renormalized = false;
    double norm_deviation = 0.0;
};

LoadedState state_from_json(const json& j);

PipelineConfig pipeline_config_from_json(const json& j);
std::vector<SourceModel> sources_from_json(const json& j);

// Wrapper around every CLI output; round-trips losslessly through JSON.
struct ReportEnvelope {
    std::string command;
    json parameters;
    json results;
    std::string artifact_version;
    std::optional<std::uint64_t> seed;
};

json to_json(const ReportEnvelope& envelope);
ReportEnvelope envelope_from_json(const json& j);

// "rounds,count" lines in increasing round order.
std::string histogram_csv(const DelayStats& stats);

}  // namespace qprep::io
