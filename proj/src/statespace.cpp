#include "qprep/statespace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qprep {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("register needs at least one qubit, got " +
                                    std::to_string(n_qubits));
    }
    if (n_qubits > kMaxQubits) {
        throw std::length_error("register of " + std::to_string(n_qubits) +
                                " qubits exceeds the cap of " + std::to_string(kMaxQubits));
    }
}

// Bit position (from LSB) of a 1-based cell; cell 1 is the MSB.
int cell_bit(int n_qubits, int cell) { return n_qubits - cell; }

}  // namespace

QubitSpec::QubitSpec(double alpha, double beta, double theta1, double theta2)
    : alpha_(alpha), beta_(beta), theta1_(theta1), theta2_(theta2) {
    if (!(alpha >= 0.0) || !(beta >= 0.0)) {
        throw std::invalid_argument("qubit spec requires alpha, beta >= 0 (canonical form)");
    }
    if (std::abs(alpha * alpha + beta * beta - 1.0) > kNormTol) {
        throw std::invalid_argument("qubit spec violates alpha^2 + beta^2 = 1");
    }
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n_qubits_);
    const auto expected = Eigen::Index{1} << n_qubits_;
    if (amplitudes_.size() != expected) {
        throw std::invalid_argument("amplitude vector has length " +
                                    std::to_string(amplitudes_.size()) + ", expected 2^" +
                                    std::to_string(n_qubits_));
    }
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTol) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    const auto dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) +
                                " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    check_qubit_count(n_qubits_);
    const auto expected = Eigen::Index{1} << n_qubits_;
    if (matrix_.rows() != expected || matrix_.cols() != expected) {
        throw std::invalid_argument("density matrix must be 2^n x 2^n");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - cdouble{1.0, 0.0}) > kNormTol) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    check_qubit_count(n_qubits);
    const auto dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(n_qubits, std::move(m));
}

StateVector make_qubit(const QubitSpec& spec) {
    Eigen::VectorXcd amps(2);
    amps(0) = std::polar(spec.alpha(), spec.theta1());
    amps(1) = std::polar(spec.beta(), spec.theta2());
    return StateVector(1, std::move(amps));
}

StateVector all_zero(int n_qubits) {
    return StateVector::basis_state(n_qubits, 0);
}

StateVector uniform(int n_qubits) {
    check_qubit_count(n_qubits);
    // R_y(pi/2): rotates |0> to (|0> + |1>)/sqrt(2).
    const double c = std::numbers::sqrt2 / 2.0;
    Eigen::Matrix2cd rotation;
    rotation << c, -c, c, c;
    StateVector state = all_zero(n_qubits);
    for (int cell = 1; cell <= n_qubits; ++cell) {
        state = apply_single_qubit(state, cell, rotation);
    }
    return state;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const int total = a.n_qubits() + b.n_qubits();
    if (total > kMaxQubits) {
        throw std::length_error("tensor product of " + std::to_string(total) +
                                " qubits exceeds the cap of " + std::to_string(kMaxQubits));
    }
    Eigen::VectorXcd amps = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes());
    return StateVector(total, std::move(amps));
}

StateVector apply_single_qubit(const StateVector& psi, int cell,
                               const Eigen::Matrix2cd& gate) {
    const int n = psi.n_qubits();
    if (cell < 1 || cell > n) {
        throw std::out_of_range("cell " + std::to_string(cell) + " out of range 1.." +
                                std::to_string(n));
    }
    const std::uint64_t mask = std::uint64_t{1} << cell_bit(n, cell);
    Eigen::VectorXcd amps = psi.amplitudes();
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        if (i & mask) continue;
        const auto i0 = static_cast<Eigen::Index>(i);
        const auto i1 = static_cast<Eigen::Index>(i | mask);
        const cdouble a0 = amps(i0);
        const cdouble a1 = amps(i1);
        amps(i0) = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps(i1) = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
    return StateVector(n, std::move(amps));
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner product requires matching register sizes");
    }
    return a.amplitudes().dot(b.amplitudes());
}

DensityMatrix pure_density(const StateVector& psi) {
    Eigen::MatrixXcd m = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(psi.n_qubits(), std::move(m));
}

DensityMatrix product_density(const std::vector<DensityMatrix>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("product_density needs at least one part");
    }
    int total = 0;
    for (const auto& part : parts) total += part.n_qubits();
    if (total > kMaxQubits) {
        throw std::length_error("product of " + std::to_string(total) +
                                " qubits exceeds the cap of " + std::to_string(kMaxQubits));
    }
    Eigen::MatrixXcd acc = parts.front().matrix();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = Eigen::kroneckerProduct(acc, parts[i].matrix()).eval();
    }
    return DensityMatrix(total, std::move(acc));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep_cells) {
    const int n = rho.n_qubits();
    std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
    for (int cell : keep_cells) {
        if (cell < 1 || cell > n) {
            throw std::out_of_range("keep cell " + std::to_string(cell) +
                                    " out of range 1.." + std::to_string(n));
        }
        kept[static_cast<std::size_t>(cell)] = true;
    }
    std::vector<int> keep_bits;   // bit positions of kept cells, output-MSB first
    std::vector<int> trace_bits;  // bit positions of traced cells
    for (int cell = 1; cell <= n; ++cell) {
        (kept[static_cast<std::size_t>(cell)] ? keep_bits : trace_bits)
            .push_back(cell_bit(n, cell));
    }
    if (keep_bits.empty()) {
        throw std::out_of_range("partial_trace needs a nonempty set of cells to keep");
    }

    const int m = static_cast<int>(keep_bits.size());
    const auto out_dim = std::uint64_t{1} << m;
    const auto env_dim = std::uint64_t{1} << (n - m);

    // Spread an output (or environment) index back onto its bit positions
    // in the full register index.
    const auto expand = [](std::uint64_t compact, const std::vector<int>& bits) {
        std::uint64_t full = 0;
        for (std::size_t j = 0; j < bits.size(); ++j) {
            if (compact & (std::uint64_t{1} << (bits.size() - 1 - j))) {
                full |= std::uint64_t{1} << bits[j];
            }
        }
        return full;
    };

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(out_dim),
                                                  static_cast<Eigen::Index>(out_dim));
    for (std::uint64_t a = 0; a < out_dim; ++a) {
        const std::uint64_t row_base = expand(a, keep_bits);
        for (std::uint64_t b = 0; b < out_dim; ++b) {
            const std::uint64_t col_base = expand(b, keep_bits);
            cdouble sum = 0.0;
            for (std::uint64_t e = 0; e < env_dim; ++e) {
                const std::uint64_t env = expand(e, trace_bits);
                sum += rho.matrix()(static_cast<Eigen::Index>(row_base | env),
                                    static_cast<Eigen::Index>(col_base | env));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
        }
    }
    return DensityMatrix(m, std::move(out));
}

double purity(const DensityMatrix& rho) {
    // trace(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return rho.matrix().squaredNorm();
}

double fidelity(const StateVector& psi, const DensityMatrix& rho) {
    if (psi.n_qubits() != rho.n_qubits()) {
        throw std::invalid_argument("fidelity requires matching register sizes");
    }
    const cdouble value = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
    return value.real();
}

}  // namespace qprep
