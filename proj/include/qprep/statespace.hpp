// statespace.hpp
// Dense complex state vectors and density matrices for small qubit
// registers: construction, composition, reduction, comparison.
//
// Conventions used throughout the library:
//   - Register cells are numbered 1..n and cell 1 is the most significant
//     bit of the basis index, so |100> for n=3 sits at index 4.
//   - All values are immutable after construction; every operation is a
//     pure function and safe to call from multiple threads.

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qprep {

using cdouble = std::complex<double>;

// Dense vectors/matrices only; 2^12 amplitudes is the largest register
// this library will represent.
inline constexpr int kMaxQubits = 12;

// Default absolute tolerance for invariant checks and comparisons.
inline constexpr double kNormTol = 1e-10;

// Single-qubit parameters: alpha e^{i theta1}|0> + beta e^{i theta2}|1>,
// with alpha, beta >= 0 and alpha^2 + beta^2 = 1 (signs live in the phases).
class QubitSpec {
  public:
    QubitSpec() = default;  // |0>
    QubitSpec(double alpha, double beta, double theta1, double theta2);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double theta1() const { return theta1_; }
    double theta2() const { return theta2_; }

  private:
    double alpha_ = 1.0;
    double beta_ = 0.0;
    double theta1_ = 0.0;
    double theta2_ = 0.0;
};

// Normalized amplitude vector over the 2^n computational basis states.
class StateVector {
  public:
    StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

    // |index> as an n-qubit basis state.
    static StateVector basis_state(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(amplitudes_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    cdouble amplitude(std::uint64_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

  private:
    int n_qubits_;
    Eigen::VectorXcd amplitudes_;
};

// Hermitian, positive-semidefinite, trace-1 matrix over the same basis.
// Hermiticity and trace are checked at construction; eigenvalue
// nonnegativity is enforced where a spectrum is actually computed
// (see thermo::von_neumann_entropy).
class DensityMatrix {
  public:
    DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix);

    static DensityMatrix maximally_mixed(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(matrix_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

  private:
    int n_qubits_;
    Eigen::MatrixXcd matrix_;
};

// (alpha e^{i theta1}, beta e^{i theta2}) as a 1-qubit state.
StateVector make_qubit(const QubitSpec& spec);

// |00...0>: amplitude 1 at index 0.
StateVector all_zero(int n_qubits);

// Equal superposition 1/sqrt(2^n) everywhere. Built by applying the
// balanced rotation R_y(pi/2) to each cell of all_zero(n) in sequence;
// tests hold the direct-fill oracle against this cascade.
StateVector uniform(int n_qubits);

// Kronecker composition; a's cells become the leading (most significant)
// cells of the result.
StateVector tensor(const StateVector& a, const StateVector& b);

// Applies a 2x2 unitary to one cell (1-based) of the register.
StateVector apply_single_qubit(const StateVector& psi, int cell,
                               const Eigen::Matrix2cd& gate);

cdouble inner_product(const StateVector& a, const StateVector& b);

// |psi><psi|.
DensityMatrix pure_density(const StateVector& psi);

// Kronecker product of the parts in cell order (separable by construction).
DensityMatrix product_density(const std::vector<DensityMatrix>& parts);

// Reduced state over the kept cells (1-based, set semantics, order
// preserved by cell number); trace is preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep_cells);

// trace(rho^2), in (0, 1]; equals 1 iff rho is pure.
double purity(const DensityMatrix& rho);

// <psi|rho|psi>, in [0, 1].
double fidelity(const StateVector& psi, const DensityMatrix& rho);

}  // namespace qprep
