// symmetry.hpp
// Permutation symmetrization over qubit registers: Dicke basis,
// symmetric/antisymmetric projectors, distinguishable-state counting,
// and the realizability check for target states.
//
// The production symmetric projector is assembled from the n+1 Dicke
// outer products (polynomial cost). The n!-term permutation sums are
// retained as oracles, capped at n <= 7.

#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qprep/statespace.hpp"

namespace qprep {

// Coefficients of a state in the Dicke basis, indexed by Hamming weight k,
// plus the norm of whatever lies outside the symmetric subspace.
struct DickeCoordinates {
    int n_qubits = 0;
    Eigen::VectorXcd coeffs;       // length n+1, coeffs[k] = <D_k|psi>
    double residual_norm = 0.0;
};

// Verdict on whether a state lies inside the symmetric subspace.
struct SymmetryReport {
    int n_qubits = 0;
    double overlap = 0.0;          // squared norm of the symmetric projection
    bool realizable = false;       // overlap >= 1 - tolerance_used
    double tolerance_used = 0.0;
};

inline constexpr int kBruteForceMaxQubits = 7;
inline constexpr double kRealizableDefaultTol = 1e-9;

// C(n, k) as a double (exact for n <= kMaxQubits).
double binomial(int n, int k);

// Equal-amplitude superposition of all weight-k basis strings,
// amplitude 1/sqrt(C(n,k)) on each.
StateVector dicke(int n_qubits, int weight);

// Normalized projection of psi onto the symmetric subspace, plus the
// squared norm of the unnormalized projection. Throws std::domain_error
// when the projection norm is below 1e-12 (no symmetric component).
std::pair<StateVector, double> symmetrize(const StateVector& psi);

// Sum_k |D_k><D_k| built from Dicke outer products.
Eigen::MatrixXcd symmetric_projector(int n_qubits);

// (1/n!) Sum_pi P_pi over all cell permutations; oracle for
// symmetric_projector. Sequential summation order.
Eigen::MatrixXcd symmetrizer_bruteforce(int n_qubits);

// (1/n!) Sum_pi sgn(pi) P_pi; sgn from transposition-count parity.
Eigen::MatrixXcd antisymmetrizer_bruteforce(int n_qubits);

// Dimension of the symmetric subspace: n + 1.
int symmetric_dim(int n_qubits);

// Dicke-basis coordinates of psi and the residual outside the subspace.
DickeCoordinates to_dicke(const StateVector& psi);

// Realizability verdict at the given overlap-deficit tolerance,
// tolerance in (0, 0.1].
SymmetryReport check_realizable(const StateVector& psi,
                                double tolerance = kRealizableDefaultTol);

// Relabels cells: the qubit in cell c moves to cell perm[c-1]; perm must
// be a bijection of 1..n.
StateVector permute_cells(const StateVector& psi, const std::vector<int>& perm);

}  // namespace qprep
