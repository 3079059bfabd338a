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


#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <vector>

#include "generators.hpp"
#include "gtest/gtest.h"
#include "isingorder/quantum.hpp"
#include "oracles.hpp"

using namespace isingorder;

namespace {

DataSet rows(const std::vector<std::vector<double>> &xs) {
    DataSet d;
    for (std::size_t j = 0; j < xs.front().size(); ++j) d.feature_names.push_back("f" + std::to_string(j));
    for (std::size_t i = 0; i < xs.size(); ++i) d.samples.push_back({xs[i], static_cast<int>(i % 2)});
    return d;
}

void expect_valid_kernel(const KernelMatrix &k) {
    ASSERT_EQ(k.rows(), k.cols());
    for (Eigen::Index i = 0; i < k.rows(); ++i) {
        EXPECT_NEAR(k(i, i), 1.0, 1e-10);
        for (Eigen::Index j = 0; j < k.cols(); ++j) {
            EXPECT_NEAR(k(i, j), k(j, i), 1e-10);
            EXPECT_GE(k(i, j), -1e-12);
            EXPECT_LE(k(i, j), 1.0 + 1e-10);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-8);
}

}  // namespace

TEST(quantum, state_vector_basics) {
    StateVector s(3);
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_EQ(s[0], Complex(1.0));
    s.apply_hadamard_all();
    for (std::size_t b = 0; b < 8; ++b) EXPECT_NEAR(s[b].real(), 1.0 / std::sqrt(8.0), 1e-15);
    s.apply_hadamard_all();
    EXPECT_NEAR(s[0].real(), 1.0, 1e-15);

    auto basis = StateVector::basis(SpinString{1, -1, -1});
    EXPECT_EQ(basis[0b110], Complex(1.0));
    EXPECT_THROW(StateVector(0), Error);
    EXPECT_THROW(StateVector(kMaxQubits + 1), Error);
    EXPECT_THROW(StateVector(1, {1.0, 1.0}), Error);
    EXPECT_THROW(StateVector(2, {1.0, 0.0}), Error);
}

TEST(quantum, zero_coefficients_give_zero_state) {
    for (std::size_t n = 1; n <= 6; ++n) {
        IsingCoefficients c{n, std::vector<double>(n, 0.0), {}, {}};
        auto psi = featuremap_state(c);
        EXPECT_NEAR(std::abs(psi[0] - Complex(1.0)), 0.0, 1e-14);
        for (std::size_t b = 1; b < psi.dim(); ++b) EXPECT_NEAR(std::abs(psi[b]), 0.0, 1e-14);
    }
}

TEST(quantum, single_qubit_matches_two_by_two_product) {
    for (double x : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
        IsingCoefficients c{1, {x}, {}, {}};
        auto psi = featuremap_state(c);
        // U H U H |0> with U = diag(e^{ix}, e^{-ix}) by hand.
        const double r = 1.0 / std::sqrt(2.0);
        const Complex u0 = std::polar(1.0, x), u1 = std::polar(1.0, -x);
        const Complex a0 = u0 * r, a1 = u1 * r;
        const Complex b0 = r * (a0 + a1), b1 = r * (a0 - a1);
        EXPECT_NEAR(std::abs(psi[0] - u0 * b0), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(psi[1] - u1 * b1), 0.0, 1e-14);
        EXPECT_NEAR(std::norm(psi[0]), std::pow(std::cos(x), 2), 1e-14);
    }
}

TEST(quantum, featuremap_matches_dense_oracle) {
    gen::Gen g(41);
    for (int t = 0; t < 40; ++t) {
        auto lat = g.lattice(2, 6);
        auto x = g.features(lat.n_sites(), -2.0, 2.0);
        auto psi = featuremap_state(build_coefficients(x, lat));
        auto want = oracle::featuremap(x, lat);
        for (std::size_t b = 0; b < psi.dim(); ++b) ASSERT_NEAR(std::abs(psi[b] - want[b]), 0.0, 1e-10);
    }
}

TEST(quantum, featuremap_preserves_norm) {
    gen::Gen g(42);
    for (int t = 0; t < 100; ++t) {
        auto lat = g.lattice(2, 8);
        auto psi = featuremap_state(build_coefficients(g.features(lat.n_sites(), -4.0, 4.0), lat));
        EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    }
}

TEST(quantum, energy_table_is_the_hamiltonian_diagonal) {
    gen::Gen g(43);
    auto lat = build_triangle_ladder(5);
    auto x = g.features(5, -1.0, 1.0);
    auto table = energy_table(build_coefficients(x, lat));
    for (std::uint64_t b = 0; b < 32; ++b) EXPECT_NEAR(table[b], oracle::energy(x, lat, oracle::spins_of(b, 5)), 1e-12);
}

TEST(quantum, kernel_matches_dense_oracle) {
    gen::Gen g(44);
    for (std::size_t n : {2, 4, 6}) {
        std::vector<LatticeGraph> lattices{build_chain(n)};
        if (n >= 4) lattices.push_back(build_lattice(LatticeKind::TriangleGrid, n, 2));
        for (const auto &lat : lattices) {
            std::vector<std::vector<double>> xs;
            for (int i = 0; i < 8; ++i) xs.push_back(g.features(n, -1.0, 1.0));
            auto k = kernel_matrix(rows(xs), lat, 2);
            expect_valid_kernel(k);
            std::vector<std::vector<oracle::cplx>> states;
            for (const auto &x : xs) states.push_back(oracle::featuremap(x, lat));
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) ASSERT_NEAR(k(i, j), oracle::fidelity(states[j], states[i]), 1e-10);
        }
    }
}

TEST(quantum, kernel_duplicates_and_cross) {
    gen::Gen g(45);
    auto lat = build_square_ladder(4);
    auto a = g.features(4, -1.0, 1.0), b = g.features(4, -1.0, 1.0);
    auto d = rows({a, b, a});
    auto k = kernel_matrix(d, lat);
    EXPECT_NEAR(k(0, 2), 1.0, 1e-12);
    EXPECT_LT(k(0, 1), 1.0);
    auto cross = kernel_cross(rows({b}), d, lat);
    ASSERT_EQ(cross.rows(), 1);
    ASSERT_EQ(cross.cols(), 3);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(cross(0, j), k(1, j), 1e-14);
    EXPECT_THROW(kernel_matrix(rows({{1.0, 2.0}}), lat), Error);
}

TEST(quantum, random_kernels_are_valid) {
    gen::Gen g(46);
    for (int t = 0; t < 10; ++t) {
        auto lat = g.lattice(2, 8);
        std::vector<std::vector<double>> xs;
        for (int i = 0; i < 12; ++i) xs.push_back(g.features(lat.n_sites(), -3.0, 3.0));
        expect_valid_kernel(kernel_matrix(rows(xs), lat));
    }
}

TEST(quantum, hadamard_test_on_basis_states) {
    auto af1 = StateVector::basis(af1_pattern(4));
    const std::array<std::size_t, 2> pair{0, 1};
    const std::array<std::size_t, 1> first{0};
    for (std::uint64_t shots : {1u, 7u, 10000u}) {
        EXPECT_EQ(hadamard_test(af1, pair, shots, shots), -1.0);
        EXPECT_EQ(hadamard_test(af1, first, shots, shots), 1.0);
    }
    auto m = measure_ground_state_order(GroundStateResult{flipped(af1_pattern(4)), 0.0, false, {}}, 123, 5);
    EXPECT_EQ(m.correlation, -1.0);
    EXPECT_EQ(m.parity, -1.0);
    m = measure_state_order(StateVector::basis(SpinString(4, 1)), 99, 5);
    EXPECT_EQ(m.correlation, 1.0);
    EXPECT_EQ(m.parity, 1.0);
}

TEST(quantum, hadamard_matches_classical_order_on_random_strings) {
    gen::Gen g(47);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = g.index(2, 10);
        auto s = g.spins(n);
        auto m = measure_state_order(StateVector::basis(s), g.index(1, 1000), t);
        EXPECT_EQ(m.correlation, chain_correlation(s));
        EXPECT_EQ(m.parity, static_cast<double>(parity(s)));
    }
}

TEST(quantum, hadamard_p_zero_matches_dense_circuit) {
    gen::Gen g(48);
    for (int t = 0; t < 20; ++t) {
        auto lat = g.lattice(2, 5);
        const std::size_t n = lat.n_sites();
        auto x = g.features(n, -2.0, 2.0);
        auto psi = featuremap_state(build_coefficients(x, lat));
        std::vector<std::size_t> support;
        for (std::size_t q = 0; q < n; ++q)
            if (g.coin()) support.push_back(q);
        if (support.empty()) support.push_back(0);
        auto out = hadamard_test_detailed(psi, support, 1000, 1);
        EXPECT_NEAR(out.p_zero, oracle::hadamard_p_zero(oracle::featuremap(x, lat), n, support), 1e-10);
        EXPECT_NEAR(2.0 * out.p_zero - 1.0, expectation_z(psi, support), 1e-12);
    }
}

TEST(quantum, hadamard_superposition_statistics) {
    StateVector plus(1);
    plus.apply_hadamard_all();
    const std::array<std::size_t, 1> q0{0};
    EXPECT_NEAR(expectation_z(plus, q0), 0.0, 1e-15);
    std::size_t inside = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) inside += std::abs(hadamard_test(plus, q0, 10000, seed)) <= 0.03;
    EXPECT_GE(inside, 396u);
    EXPECT_EQ(hadamard_test(plus, q0, 10000, 3), hadamard_test(plus, q0, 10000, 3));
}

TEST(quantum, hadamard_errors) {
    StateVector s(2);
    EXPECT_THROW(hadamard_test(s, std::vector<std::size_t>{}, 10, 1), Error);
    EXPECT_THROW(hadamard_test(s, std::vector<std::size_t>{2}, 10, 1), Error);
    EXPECT_THROW(hadamard_test(s, std::vector<std::size_t>{0}, 0, 1), Error);
    EXPECT_THROW(measure_state_order(StateVector(1), 10, 1), Error);
}
