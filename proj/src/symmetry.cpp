#include "qprep/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qprep {

namespace {

constexpr double kZeroProjectionTol = 1e-12;

void check_brute_force_cap(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    if (n_qubits > kBruteForceMaxQubits) {
        throw std::length_error("permutation sum over " + std::to_string(n_qubits) +
                                "! terms exceeds the brute-force cap of n = " +
                                std::to_string(kBruteForceMaxQubits));
    }
}

int hamming_weight(std::uint64_t x) { return std::popcount(x); }

// Basis-index relabeling for a cell permutation: the bit of x belonging
// to cell c moves to cell perm[c-1]. Cell 1 is the MSB.
std::uint64_t permute_index(std::uint64_t x, const std::vector<int>& perm, int n) {
    std::uint64_t y = 0;
    for (int cell = 1; cell <= n; ++cell) {
        const int src_bit = n - cell;
        const int dst_bit = n - perm[static_cast<std::size_t>(cell - 1)];
        if (x & (std::uint64_t{1} << src_bit)) {
            y |= std::uint64_t{1} << dst_bit;
        }
    }
    return y;
}

// Minimal transposition count of a permutation is n - #cycles; the sign
// is the parity of that count.
int permutation_sign(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int cycles = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++cycles;
        int c = start;
        while (!seen[static_cast<std::size_t>(c)]) {
            seen[static_cast<std::size_t>(c)] = true;
            c = perm[static_cast<std::size_t>(c - 1)];
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

void validate_permutation(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation length differs from register size");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Eigen::MatrixXcd permutation_average(int n_qubits, bool signed_sum) {
    check_brute_force_cap(n_qubits);
    const auto dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);

    std::vector<int> perm(static_cast<std::size_t>(n_qubits));
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t count = 0;
    do {
        const double weight = signed_sum ? permutation_sign(perm) : 1.0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n_qubits); ++x) {
            const std::uint64_t y = permute_index(x, perm, n_qubits);
            acc(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += weight;
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return acc / static_cast<double>(count);
}

}  // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(result);
}

StateVector dicke(int n_qubits, int weight) {
    if (weight < 0 || weight > n_qubits) {
        throw std::domain_error("Dicke weight " + std::to_string(weight) +
                                " out of range 0.." + std::to_string(n_qubits));
    }
    const auto dim = std::uint64_t{1} << n_qubits;
    const double amp = 1.0 / std::sqrt(binomial(n_qubits, weight));
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (hamming_weight(x) == weight) {
            amps(static_cast<Eigen::Index>(x)) = amp;
        }
    }
    return StateVector(n_qubits, std::move(amps));
}

std::pair<StateVector, double> symmetrize(const StateVector& psi) {
    const int n = psi.n_qubits();
    const std::uint64_t dim = psi.dim();

    // Projection via the Dicke projector: within each Hamming-weight class
    // every amplitude becomes the class mean.
    Eigen::VectorXcd class_sum = Eigen::VectorXcd::Zero(n + 1);
    for (std::uint64_t x = 0; x < dim; ++x) {
        class_sum(hamming_weight(x)) += psi.amplitude(x);
    }

    double overlap = 0.0;
    for (int k = 0; k <= n; ++k) {
        overlap += std::norm(class_sum(k)) / binomial(n, k);
    }
    if (overlap < kZeroProjectionTol) {
        throw std::domain_error("state has no symmetric component");
    }

    const double scale = 1.0 / std::sqrt(overlap);
    Eigen::VectorXcd projected(static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        const int k = hamming_weight(x);
        projected(static_cast<Eigen::Index>(x)) = class_sum(k) / binomial(n, k) * scale;
    }
    return {StateVector(n, std::move(projected)), overlap};
}

Eigen::MatrixXcd symmetric_projector(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::length_error("symmetric projector limited to 1.." +
                                std::to_string(kMaxQubits) + " qubits");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k <= n_qubits; ++k) {
        const Eigen::VectorXcd& d = dicke(n_qubits, k).amplitudes();
        proj += d * d.adjoint();
    }
    return proj;
}

Eigen::MatrixXcd symmetrizer_bruteforce(int n_qubits) {
    return permutation_average(n_qubits, /*signed_sum=*/false);
}

Eigen::MatrixXcd antisymmetrizer_bruteforce(int n_qubits) {
    return permutation_average(n_qubits, /*signed_sum=*/true);
}

int symmetric_dim(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    return n_qubits + 1;
}

DickeCoordinates to_dicke(const StateVector& psi) {
    const int n = psi.n_qubits();
    const std::uint64_t dim = psi.dim();

    Eigen::VectorXcd class_sum = Eigen::VectorXcd::Zero(n + 1);
    for (std::uint64_t x = 0; x < dim; ++x) {
        class_sum(hamming_weight(x)) += psi.amplitude(x);
    }

    DickeCoordinates coords;
    coords.n_qubits = n;
    coords.coeffs = Eigen::VectorXcd(n + 1);
    for (int k = 0; k <= n; ++k) {
        coords.coeffs(k) = class_sum(k) / std::sqrt(binomial(n, k));
    }

    // Residual = psi minus its reconstruction from the Dicke coefficients.
    double residual_sq = 0.0;
    for (std::uint64_t x = 0; x < dim; ++x) {
        const int k = hamming_weight(x);
        const cdouble recon = coords.coeffs(k) / std::sqrt(binomial(n, k));
        residual_sq += std::norm(psi.amplitude(x) - recon);
    }
    coords.residual_norm = std::sqrt(residual_sq);
    return coords;
}

SymmetryReport check_realizable(const StateVector& psi, double tolerance) {
    if (!(tolerance > 0.0) || tolerance > 0.1) {
        throw std::domain_error("realizability tolerance must lie in (0, 0.1]");
    }
    const DickeCoordinates coords = to_dicke(psi);
    double overlap = 1.0 - coords.residual_norm * coords.residual_norm;
    overlap = std::clamp(overlap, 0.0, 1.0);

    SymmetryReport report;
    report.n_qubits = psi.n_qubits();
    report.overlap = overlap;
    report.tolerance_used = tolerance;
    report.realizable = overlap >= 1.0 - tolerance;
    return report;
}

StateVector permute_cells(const StateVector& psi, const std::vector<int>& perm) {
    const int n = psi.n_qubits();
    validate_permutation(perm, n);
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(psi.dim()));
    for (std::uint64_t x = 0; x < psi.dim(); ++x) {
        amps(static_cast<Eigen::Index>(permute_index(x, perm, n))) = psi.amplitude(x);
    }
    return StateVector(n, std::move(amps));
}

}  // namespace qprep
