#include "qprep/assembly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qprep {

namespace {

constexpr double kSeriesTermTol = 1e-12;
constexpr std::int64_t kSeriesMaxTerms = 1'000'000;

// SplitMix64 output function (Steele, Lea, Flood 2014). Used both to fold
// seeds into substreams and as the per-substream generator.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t fold_seed(std::uint64_t seed, std::uint64_t value) {
    return mix64(seed ^ mix64(value));
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Rounds until one cell's test passes: Bernoulli(p) per round, counted
// from 1. Draws come only from this (trial, cell) substream, so the two
// retry modes consume identical randomness.
std::int64_t rounds_for_cell(std::uint64_t seed, std::int64_t trial, int cell, double p) {
    SplitMix64 stream(fold_seed(fold_seed(seed, static_cast<std::uint64_t>(trial)),
                                static_cast<std::uint64_t>(cell)));
    std::int64_t rounds = 1;
    while (stream.next_double() >= p) {
        ++rounds;
    }
    return rounds;
}

void validate_config(const PipelineConfig& config) {
    if (config.n_qubits < 1 || config.n_qubits > kMaxQubits) {
        throw std::length_error("pipeline register size out of range 1.." +
                                std::to_string(kMaxQubits));
    }
    if (!(config.pass_probability > 0.0) || config.pass_probability > 1.0) {
        throw std::domain_error("pass probability must lie in (0, 1]");
    }
    if (config.trials < 1) {
        throw std::domain_error("trial count must be at least 1");
    }
    if (config.visibility_decay < 0.0 || config.visibility_decay > 1.0) {
        throw std::domain_error("visibility decay must lie in [0, 1]");
    }
}

}  // namespace

SourceModel::SourceModel(QubitSpec spec, double visibility, std::uint64_t seed)
    : spec_(spec), visibility_(visibility), seed_(seed) {
    if (visibility < 0.0 || visibility > 1.0) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }
}

DensityMatrix emit(const SourceModel& source) {
    const QubitSpec& q = source.spec();
    const cdouble off = source.visibility() * q.alpha() * q.beta() *
                        std::polar(1.0, q.theta1() - q.theta2());
    Eigen::MatrixXcd m(2, 2);
    m(0, 0) = q.alpha() * q.alpha();
    m(0, 1) = off;
    m(1, 0) = std::conj(off);
    m(1, 1) = q.beta() * q.beta();
    return DensityMatrix(1, std::move(m));
}

AssemblyReport assemble(const std::vector<SourceModel>& sources) {
    if (sources.empty()) {
        throw std::invalid_argument("assemble needs at least one source");
    }
    if (static_cast<int>(sources.size()) > kMaxQubits) {
        throw std::length_error("assembly of " + std::to_string(sources.size()) +
                                " qubits exceeds the cap of " + std::to_string(kMaxQubits));
    }

    std::vector<DensityMatrix> parts;
    parts.reserve(sources.size());
    for (const auto& source : sources) {
        parts.push_back(emit(source));
    }

    StateVector target = make_qubit(sources.front().spec());
    for (std::size_t i = 1; i < sources.size(); ++i) {
        target = tensor(target, make_qubit(sources[i].spec()));
    }

    DensityMatrix register_state = product_density(parts);
    const double register_purity = purity(register_state);
    const double register_entropy = von_neumann_entropy(register_state);
    const double target_fidelity = fidelity(target, register_state);
    return AssemblyReport{
        .register_state = std::move(register_state),
        .purity = register_purity,
        .entropy_bits = register_entropy,
        .fidelity_to_target = target_fidelity,
        .target = std::move(target),
    };
}

double analytic_mean_rounds(int n_qubits, double pass_probability, RetryMode mode) {
    if (n_qubits < 1) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    if (!(pass_probability > 0.0) || pass_probability > 1.0) {
        throw std::domain_error("pass probability must lie in (0, 1]");
    }
    if (mode == RetryMode::kSequential) {
        return static_cast<double>(n_qubits) / pass_probability;
    }
    // E[max of n geometrics] = sum_{r>=0} (1 - (1 - q^r)^n), q = 1 - p.
    const double q = 1.0 - pass_probability;
    double sum = 0.0;
    double q_pow = 1.0;  // q^r
    for (std::int64_t r = 0; r < kSeriesMaxTerms; ++r) {
        const double term = 1.0 - std::pow(1.0 - q_pow, n_qubits);
        if (term < kSeriesTermTol) {
            return sum;
        }
        sum += term;
        q_pow *= q;
    }
    throw std::runtime_error("retry-delay series did not converge within 1e6 terms "
                             "(pass probability too small)");
}

DelayStats delay_simulate(const PipelineConfig& config) {
    validate_config(config);

    DelayStats stats;
    stats.analytic_mean =
        analytic_mean_rounds(config.n_qubits, config.pass_probability, config.mode);

    const bool decay_active = config.visibility_decay < 1.0;
    double sum = 0.0;
    double sum_sq = 0.0;
    double visibility_sum = 0.0;
    for (std::int64_t trial = 0; trial < config.trials; ++trial) {
        std::int64_t rounds = (config.mode == RetryMode::kSequential) ? 0 : 1;
        for (int cell = 1; cell <= config.n_qubits; ++cell) {
            const std::int64_t cell_rounds =
                rounds_for_cell(config.seed, trial, cell, config.pass_probability);
            rounds = (config.mode == RetryMode::kSequential) ? rounds + cell_rounds
                                                             : std::max(rounds, cell_rounds);
        }
        sum += static_cast<double>(rounds);
        sum_sq += static_cast<double>(rounds) * static_cast<double>(rounds);
        ++stats.histogram[rounds];
        if (decay_active) {
            visibility_sum += std::pow(config.visibility_decay,
                                       static_cast<double>(rounds - 1));
        }
    }

    const double trials = static_cast<double>(config.trials);
    stats.mean_rounds = sum / trials;
    stats.variance = (config.trials > 1)
                         ? (sum_sq - sum * sum / trials) / (trials - 1.0)
                         : 0.0;
    stats.mean_visibility = decay_active ? visibility_sum / trials : 1.0;
    return stats;
}

ComparisonReport compare_pictures(int n_qubits, double visibility,
                                  double temperature_kelvin) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::length_error("register size out of range 1.." +
                                std::to_string(kMaxQubits));
    }
    const double balanced = std::numbers::sqrt2 / 2.0;
    const QubitSpec plus(balanced, balanced, 0.0, 0.0);
    std::vector<SourceModel> sources(static_cast<std::size_t>(n_qubits),
                                     SourceModel(plus, visibility));
    return ComparisonReport{
        .assembly = assemble(sources),
        .symmetry = check_realizable(uniform(n_qubits)),
        .budget = budget_for_register(n_qubits, temperature_kelvin),
    };
}

}  // namespace qprep
