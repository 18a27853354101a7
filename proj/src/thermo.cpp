#include "qprep/thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qprep {

namespace {

constexpr double kDistributionTol = 1e-9;
constexpr double kEigenvalueClamp = 1e-8;  // [-clamp, 0) -> 0; below is an error

double entropy_bits(std::span<const double> p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) {
            throw std::domain_error("probability entries must be nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kDistributionTol) {
        throw std::domain_error("probabilities sum to " + std::to_string(sum) +
                                ", expected 1");
    }
    return entropy_bits(probabilities);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(),
                                                           Eigen::EigenvaluesOnly);
    std::vector<double> spectrum;
    spectrum.reserve(static_cast<std::size_t>(solver.eigenvalues().size()));
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lambda = solver.eigenvalues()(i);
        if (lambda < -kEigenvalueClamp) {
            throw std::invalid_argument("not a state: eigenvalue " +
                                        std::to_string(lambda) + " below -1e-8");
        }
        spectrum.push_back(std::max(lambda, 0.0));
    }
    return entropy_bits(spectrum);
}

double entropy_reduction(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    return static_cast<double>(n_qubits) - std::log2(static_cast<double>(n_qubits) + 1.0);
}

double landauer_energy(double delta_bits, double temperature_kelvin) {
    if (delta_bits < 0.0) {
        throw std::domain_error("entropy delta must be nonnegative");
    }
    if (!(temperature_kelvin > 0.0)) {
        throw std::domain_error("temperature must be positive");
    }
    return delta_bits * kBoltzmann * temperature_kelvin * std::numbers::ln2;
}

EntropyBudget budget_for_register(int n_qubits, double temperature_kelvin) {
    EntropyBudget budget;
    budget.n_qubits = n_qubits;
    budget.entropy_before_bits = static_cast<double>(n_qubits);
    budget.entropy_after_bits = std::log2(static_cast<double>(n_qubits) + 1.0);
    budget.delta_bits = entropy_reduction(n_qubits);
    budget.temperature_kelvin = temperature_kelvin;
    budget.energy_joules = landauer_energy(budget.delta_bits, temperature_kelvin);
    return budget;
}

}  // namespace qprep
