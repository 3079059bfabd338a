// Copyright 2026 The isingorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISINGORDER_QUANTUM_HPP
#define ISINGORDER_QUANTUM_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "isingorder/common.hpp"
#include "isingorder/dataio.hpp"
#include "isingorder/encoding.hpp"
#include "isingorder/lattice.hpp"
#include "isingorder/order.hpp"

namespace isingorder {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 20;

/// Dense n-qubit state. Basis index b is little-endian: qubit q is bit q of b,
/// and bit value 0 is spin +1.
class StateVector {
   public:
    explicit StateVector(std::size_t n_qubits) : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
        check_size(n_qubits);
        amps_[0] = 1.0;
    }

    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
        : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
        check_size(n_qubits);
        if (amps_.size() != (std::size_t{1} << n_qubits)) throw Error("amplitude count must be 2^n");
        if (std::abs(norm() - 1.0) > 1e-10) throw Error("state vector is not normalised");
    }

    static StateVector basis(std::span<const Spin> spins) {
        StateVector s(spins.size());
        s.amps_[0] = 0.0;
        s.amps_[index_from_spins(spins)] = 1.0;
        return s;
    }

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex operator[](std::size_t b) const { return amps_[b]; }

    double norm() const {
        double acc = 0.0;
        for (const auto &a : amps_) acc += std::norm(a);
        return std::sqrt(acc);
    }

    /// H on every qubit (normalised fast Walsh-Hadamard transform).
    void apply_hadamard_all() {
        const double scale = 1.0 / std::sqrt(2.0);
        for (std::size_t half = 1; half < amps_.size(); half <<= 1)
            for (std::size_t block = 0; block < amps_.size(); block += 2 * half)
                for (std::size_t k = block; k < block + half; ++k) {
                    const Complex u = amps_[k], v = amps_[k + half];
                    amps_[k] = (u + v) * scale;
                    amps_[k + half] = (u - v) * scale;
                }
    }

    /// Multiplies amplitude b by exp(i * theta[b]).
    void apply_diagonal_phase(std::span<const double> theta) {
        if (theta.size() != amps_.size()) throw Error("phase table size mismatch");
        for (std::size_t b = 0; b < amps_.size(); ++b) amps_[b] *= std::polar(1.0, theta[b]);
    }

   private:
    static void check_size(std::size_t n) {
        if (n == 0 || n > kMaxQubits)
            throw Error("state vector supports 1.." + std::to_string(kMaxQubits) + " qubits, got " + std::to_string(n));
    }

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// <a|b>
inline Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) throw Error("inner product of states with different qubit counts");
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

/// Ising energy of every computational basis state; the diagonal of H.
inline std::vector<double> energy_table(const IsingCoefficients &c) {
    if (c.n_sites == 0 || c.n_sites > kMaxQubits) throw Error("energy table size out of range");
    std::vector<double> out(std::size_t{1} << c.n_sites);
    SpinString s(c.n_sites);
    for (std::size_t b = 0; b < out.size(); ++b) {
        for (std::size_t i = 0; i < c.n_sites; ++i) s[i] = ((b >> i) & 1U) ? Spin{-1} : Spin{1};
        out[b] = energy(c, s);
    }
    return out;
}

/// |Phi(x)> = U H^n U H^n |0...0> with U = exp(iH) diagonal.
inline StateVector featuremap_state(const IsingCoefficients &c) {
    if (c.n_sites > kMaxQubits) throw Error("feature map supports at most " + std::to_string(kMaxQubits) + " qubits");
    const auto theta = energy_table(c);
    StateVector psi(c.n_sites);
    psi.apply_hadamard_all();
    psi.apply_diagonal_phase(theta);
    psi.apply_hadamard_all();
    psi.apply_diagonal_phase(theta);
    return psi;
}

using KernelMatrix = Eigen::MatrixXd;

namespace detail {

inline std::vector<StateVector> feature_states(const DataSet &data, const LatticeGraph &lattice, unsigned threads) {
    std::vector<std::optional<StateVector>> slots(data.size());
    parallel_for(
        data.size(),
        [&](std::size_t i) {
            if (data.samples[i].features.size() != lattice.n_sites())
                throw Error("sample " + std::to_string(i) + " width " +
                            std::to_string(data.samples[i].features.size()) + " != lattice sites " +
                            std::to_string(lattice.n_sites()));
            slots[i].emplace(featuremap_state(build_coefficients(data.samples[i].features, lattice)));
        },
        threads);
    std::vector<StateVector> out;
    out.reserve(slots.size());
    for (auto &s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace detail

/// Fidelity kernel K_ij = |<Phi(x_j)|Phi(x_i)>|^2 over one dataset.
inline KernelMatrix kernel_matrix(const DataSet &data, const LatticeGraph &lattice, unsigned threads = 0) {
    const auto states = detail::feature_states(data, lattice, threads);
    const auto n = static_cast<Eigen::Index>(states.size());
    KernelMatrix k(n, n);
    parallel_for(
        states.size(),
        [&](std::size_t i) {
            const auto ii = static_cast<Eigen::Index>(i);
            for (std::size_t j = 0; j <= i; ++j) {
                const double f = std::norm(inner_product(states[j], states[i]));
                k(ii, static_cast<Eigen::Index>(j)) = f;
            }
        },
        threads);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) k(i, j) = k(j, i);
    return k;
}

/// Rectangular kernel: rows are `rows` samples, columns are `cols` samples.
inline KernelMatrix kernel_cross(const DataSet &rows, const DataSet &cols, const LatticeGraph &lattice,
                                 unsigned threads = 0) {
    const auto a = detail::feature_states(rows, lattice, threads);
    const auto b = detail::feature_states(cols, lattice, threads);
    KernelMatrix k(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
    parallel_for(
        a.size(),
        [&](std::size_t i) {
            for (std::size_t j = 0; j < b.size(); ++j)
                k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::norm(inner_product(b[j], a[i]));
        },
        threads);
    return k;
}

/// Exact <psi| prod_{q in support} Z_q |psi>.
inline double expectation_z(const StateVector &state, std::span<const std::size_t> support) {
    std::uint64_t mask = 0;
    for (auto q : support) {
        if (q >= state.n_qubits()) throw Error("support qubit " + std::to_string(q) + " out of range");
        mask |= std::uint64_t{1} << q;
    }
    double acc = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b)
        acc += (std::popcount(b & mask) % 2 == 0 ? 1.0 : -1.0) * std::norm(state[b]);
    return acc;
}

struct HadamardTestOutcome {
    double estimate;         // 2 * zeros / shots - 1
    double p_zero;           // exact ancilla P(0)
    std::uint64_t zeros;     // sampled count of ancilla outcome 0
};

/// Ancilla H, controlled-(prod Z on support), H, then `shots` ancilla
/// measurements drawn as one binomial sample from the exact P(0).
inline HadamardTestOutcome hadamard_test_detailed(const StateVector &state, std::span<const std::size_t> support,
                                                  std::uint64_t shots, std::uint64_t seed) {
    if (support.empty()) throw Error("Hadamard test needs a non-empty Z support");
    if (shots == 0) throw Error("Hadamard test needs at least one shot");
    std::uint64_t mask = 0;
    for (auto q : support) {
        if (q >= state.n_qubits()) throw Error("support qubit " + std::to_string(q) + " out of range");
        mask |= std::uint64_t{1} << q;
    }
    // After the final H the ancilla-0 branch holds (psi + P psi) / 2.
    double p_zero = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        const double sign = std::popcount(b & mask) % 2 == 0 ? 1.0 : -1.0;
        const Complex branch0 = 0.5 * (state[b] + sign * state[b]);
        p_zero += std::norm(branch0);
    }
    p_zero = std::clamp(p_zero, 0.0, 1.0);

    std::uint64_t zeros = 0;
    if (p_zero >= 1.0) {
        zeros = shots;
    } else if (p_zero > 0.0) {
        std::mt19937_64 rng(seed);
        std::binomial_distribution<std::uint64_t> draw(shots, p_zero);
        zeros = draw(rng);
    }
    const double estimate = 2.0 * static_cast<double>(zeros) / static_cast<double>(shots) - 1.0;
    return {estimate, p_zero, zeros};
}

inline double hadamard_test(const StateVector &state, std::span<const std::size_t> support, std::uint64_t shots,
                            std::uint64_t seed) {
    return hadamard_test_detailed(state, support, shots, seed).estimate;
}

struct OrderMeasurement {
    double correlation;  // mean of the n-1 estimated <Z_i Z_{i+1}>
    double parity;       // estimated <Z_0>
};

/// Runs the n-1 nearest-pair ZZ tests and the qubit-0 parity test on a basis
/// ground state. Each test gets its own seed derived from (seed, test index).
inline OrderMeasurement measure_state_order(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    const std::size_t n = state.n_qubits();
    if (n < 2) throw Error("order measurement needs at least 2 qubits");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::array<std::size_t, 2> pair{i, i + 1};
        acc += hadamard_test(state, pair, shots, derive_seed(seed, i));
    }
    const std::array<std::size_t, 1> first{0};
    return {acc / static_cast<double>(n - 1), hadamard_test(state, first, shots, derive_seed(seed, n))};
}

inline OrderMeasurement measure_ground_state_order(const GroundStateResult &result, std::uint64_t shots,
                                                   std::uint64_t seed) {
    return measure_state_order(StateVector::basis(result.spin_string), shots, seed);
}

}  // namespace isingorder

#endif  // ISINGORDER_QUANTUM_HPP
