// assembly.hpp
// State-preparation pipeline simulation: independent qubit sources with
// phase noise, assembly of the register as a product mixture, diagnostics
// against the intended coherent superposition, and the test-and-transport
// retry-delay model.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qprep/statespace.hpp"
#include "qprep/symmetry.hpp"
#include "qprep/thermo.hpp"

namespace qprep {

// One qubit source: the intended pure state plus how much off-diagonal
// coherence survives transport (1 = none lost, 0 = fully dephased).
class SourceModel {
  public:
    SourceModel(QubitSpec spec, double visibility, std::uint64_t seed = 0);

    const QubitSpec& spec() const { return spec_; }
    double visibility() const { return visibility_; }
    std::uint64_t seed() const { return seed_; }

  private:
    QubitSpec spec_;
    double visibility_;
    std::uint64_t seed_;
};

enum class RetryMode {
    kSequential,     // cells tested one after another; rounds add up
    kParallelRetry,  // all cells tested each round; failed ones repeat
};

// Retry-delay Monte Carlo setup. visibility_decay < 1 is an extrapolation
// beyond the base model: each waiting round past the first multiplies the
// register visibility by this factor.
struct PipelineConfig {
    int n_qubits = 1;
    double pass_probability = 1.0;  // in (0, 1]
    RetryMode mode = RetryMode::kParallelRetry;
    std::int64_t trials = 1;
    std::uint64_t seed = 0;
    double visibility_decay = 1.0;  // in [0, 1]; 1 = off
};

// Diagnostics of an assembled register against its intended target.
struct AssemblyReport {
    DensityMatrix register_state;
    double purity = 0.0;
    double entropy_bits = 0.0;
    double fidelity_to_target = 0.0;
    StateVector target;
};

// Monte Carlo outcome of the retry-delay model.
struct DelayStats {
    double mean_rounds = 0.0;
    double variance = 0.0;  // unbiased sample variance
    std::map<std::int64_t, std::int64_t> histogram;  // rounds -> trial count
    double analytic_mean = 0.0;
    double mean_visibility = 1.0;  // MC mean of decay^(rounds-1); 1 when decay off
};

// End-to-end join of the three pictures for one register size.
struct ComparisonReport {
    AssemblyReport assembly;
    SymmetryReport symmetry;
    EntropyBudget budget;
};

// Single-qubit output of one source: diagonal (alpha^2, beta^2), off-
// diagonal visibility * alpha beta e^{+-i(theta1-theta2)}. Visibility 1
// reproduces pure_density(make_qubit(spec)).
DensityMatrix emit(const SourceModel& source);

// Product of the per-source emissions, with purity/entropy/fidelity
// diagnostics against the tensor product of the intended pure qubits.
AssemblyReport assemble(const std::vector<SourceModel>& sources);

// Closed-form expected rounds: n/p sequential, the tail-sum series for
// parallel-retry (truncated when a term drops below 1e-12).
double analytic_mean_rounds(int n_qubits, double pass_probability, RetryMode mode);

// Seeded Monte Carlo over config.trials; reproducible for a fixed seed
// regardless of how trials might be distributed (each (trial, cell) pair
// draws from its own substream).
DelayStats delay_simulate(const PipelineConfig& config);

// Assembly of n identical balanced sources + realizability of uniform(n)
// + the entropy budget, in one report.
ComparisonReport compare_pictures(int n_qubits, double visibility,
                                  double temperature_kelvin);

}  // namespace qprep
