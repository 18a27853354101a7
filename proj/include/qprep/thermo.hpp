// thermo.hpp
// Entropy accounting in bits and the kT ln2 energy cost of shrinking the
// register's distinguishable-state count from 2^n to n+1.

#pragma once

#include <span>

#include "qprep/statespace.hpp"

namespace qprep {

// CODATA exact value, J/K.
inline constexpr double kBoltzmann = 1.380649e-23;

// Before/after entropies of a register plus the energy that must leave
// the system at the given temperature.
struct EntropyBudget {
    int n_qubits = 0;
    double entropy_before_bits = 0.0;  // n
    double entropy_after_bits = 0.0;   // log2(n+1)
    double delta_bits = 0.0;           // before - after, >= 0
    double temperature_kelvin = 0.0;
    double energy_joules = 0.0;        // delta * k_B * T * ln 2
};

// -sum p_i log2 p_i, with 0 log 0 = 0. Entries must be >= 0 and sum to 1
// within 1e-9.
double shannon_entropy(std::span<const double> probabilities);

// Shannon entropy of the eigenvalue spectrum, in bits. Eigenvalues in
// [-1e-8, 0) are clamped to 0; anything below -1e-8 is rejected as not
// a state rather than silently fixed.
double von_neumann_entropy(const DensityMatrix& rho);

// n - log2(n+1), the drop in bits when 2^n distinguishable configurations
// collapse to n+1.
double entropy_reduction(int n_qubits);

// delta_bits * k_B * T * ln 2, in joules.
double landauer_energy(double delta_bits, double temperature_kelvin);

// Full budget for an n-qubit register at temperature T.
EntropyBudget budget_for_register(int n_qubits, double temperature_kelvin);

}  // namespace qprep
