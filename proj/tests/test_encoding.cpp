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


#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <vector>

#include "generators.hpp"
#include "gtest/gtest.h"
#include "isingorder/encoding.hpp"
#include "isingorder/order.hpp"
#include "oracles.hpp"

using namespace isingorder;

TEST(encoding, coefficient_examples) {
    auto chain2 = build_chain(2);
    auto c = build_coefficients(std::vector<double>{0.0, 0.0}, chain2);
    EXPECT_EQ(c.fields, (std::vector<double>{0.0, 0.0}));
    ASSERT_EQ(c.couplings.size(), 1u);
    EXPECT_NEAR(c.couplings[0], 9.8696044, 1e-7);

    c = build_coefficients(std::vector<double>{0.5, 0.2}, chain2);
    EXPECT_NEAR(c.couplings[0], 7.7704895435765, 1e-12);

    auto g = build_triangle_grid(2, 3);
    std::vector<double> x{0.1, kPi, -0.4, 0.3, 0.9, -1.2};
    c = build_coefficients(x, g);
    for (std::size_t k = 0; k < c.edges.size(); ++k)
        if (c.edges[k].i == 1 || c.edges[k].j == 1) { EXPECT_EQ(c.couplings[k], 0.0); }

    EXPECT_THROW(build_coefficients(std::vector<double>{1.0}, chain2), Error);
    EXPECT_THROW(build_coefficients(std::vector<double>{1.0, NAN}, chain2), Error);
}

TEST(encoding, energy_examples) {
    auto chain2 = build_chain(2);
    IsingCoefficients zero{2, {0.0, 0.0}, chain2.edges(), {0.0}};
    for (std::uint64_t b = 0; b < 4; ++b) EXPECT_EQ(energy(zero, spins_from_index(b, 2)), 0.0);

    auto c0 = build_coefficients(std::vector<double>{0.0, 0.0}, chain2);
    EXPECT_NEAR(energy(c0, SpinString{1, -1}), -kPi * kPi, 1e-12);

    auto c = build_coefficients(std::vector<double>{0.5, 0.2}, chain2);
    EXPECT_NEAR(energy(c, SpinString{-1, 1}), -8.0704895435765, 1e-12);
    EXPECT_THROW(energy(c, SpinString{1}), Error);
    EXPECT_THROW(energy(c, SpinString{1, 0}), Error);
}

TEST(encoding, energy_matches_oracle) {
    gen::Gen g(11);
    for (int t = 0; t < 200; ++t) {
        auto lat = g.lattice(2, 12);
        auto x = g.features(lat.n_sites(), -4.0, 4.0);
        auto s = g.spins(lat.n_sites());
        EXPECT_NEAR(energy(build_coefficients(x, lat), s), oracle::energy(x, lat, s), 1e-10);
    }
}

TEST(encoding, index_round_trip) {
    for (std::size_t n = 1; n <= 10; ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) ASSERT_EQ(index_from_spins(spins_from_index(b, n)), b);
    EXPECT_EQ(spins_from_index(0b0110, 4), (SpinString{1, -1, -1, 1}));
}

TEST(encoding, spin_string_order_puts_up_first) {
    EXPECT_TRUE(spin_string_less({1, -1}, {-1, 1}));
    EXPECT_FALSE(spin_string_less({-1, 1}, {1, -1}));
    EXPECT_TRUE(spin_string_less({1, 1, -1}, {1, -1, 1}));
    EXPECT_FALSE(spin_string_less({1, 1}, {1, 1}));
}

TEST(encoding, ground_state_examples) {
    auto chain2 = build_chain(2);
    for (auto solve : {&ground_state_naive, &ground_state_gray}) {
        auto r = solve(build_coefficients(std::vector<double>{0.5, 0.2}, chain2), kDefaultTieTol);
        EXPECT_EQ(r.spin_string, (SpinString{-1, 1}));
        EXPECT_NEAR(r.energy, -8.0704895435765, 1e-12);
        EXPECT_FALSE(r.degenerate);

        r = solve(build_coefficients(std::vector<double>{0.0, 0.0}, chain2), kDefaultTieTol);
        EXPECT_TRUE(r.degenerate);
        EXPECT_EQ(r.degenerate_set, (std::vector<SpinString>{{1, -1}, {-1, 1}}));
        EXPECT_EQ(r.spin_string, (SpinString{1, -1}));
        EXPECT_NEAR(r.energy, -kPi * kPi, 1e-12);
    }
}

TEST(encoding, naive_matches_brute_force_oracle) {
    gen::Gen g(12);
    for (int t = 0; t < 150; ++t) {
        auto lat = g.lattice(2, 10);
        auto x = g.features(lat.n_sites(), -4.0, 4.0);
        auto want = oracle::ground(x, lat, kDefaultTieTol);
        auto got = ground_state_naive(build_coefficients(x, lat));
        EXPECT_NEAR(got.energy, want.energy, 1e-10);
        EXPECT_EQ(got.degenerate_set, want.set);
    }
}

TEST(encoding, gray_matches_naive_on_random_instances) {
    gen::Gen g(13);
    for (int t = 0; t < 300; ++t) {
        auto lat = g.lattice(2, 12);
        // Integer-valued fields on some draws make exact ties common.
        auto x = g.features(lat.n_sites(), -3.0, 3.0);
        if (t % 3 == 0)
            for (auto &v : x) v = std::round(v);
        auto c = build_coefficients(x, lat);
        auto a = ground_state_naive(c);
        auto b = ground_state_gray(c);
        ASSERT_EQ(a.energy, b.energy);
        ASSERT_EQ(a.degenerate_set, b.degenerate_set);
        ASSERT_EQ(a.spin_string, b.spin_string);
    }
}

TEST(encoding, gray_survives_resync_on_large_instances) {
    gen::Gen g(14);
    for (int t = 0; t < 6; ++t) {
        auto lat = build_lattice(t % 2 ? LatticeKind::TriangleLadder : LatticeKind::SquareLadder, 16);
        auto c = build_coefficients(g.features(16, -4.0, 4.0), lat);
        auto a = ground_state_naive(c);
        auto b = ground_state_gray(c);
        EXPECT_EQ(a.energy, b.energy);
        EXPECT_EQ(a.degenerate_set, b.degenerate_set);
    }
}

TEST(encoding, flip_covariance) {
    gen::Gen g(15);
    for (int t = 0; t < 100; ++t) {
        auto lat = g.lattice(2, 10);
        auto c = build_coefficients(g.features(lat.n_sites(), -3.0, 3.0), lat);
        auto neg = c;
        for (auto &h : neg.fields) h = -h;
        auto a = ground_state_gray(c);
        auto b = ground_state_gray(neg);
        std::vector<SpinString> flipped_set;
        for (const auto &s : a.degenerate_set) flipped_set.push_back(flipped(s));
        std::sort(flipped_set.begin(), flipped_set.end(), spin_string_less);
        EXPECT_EQ(flipped_set, b.degenerate_set);
        EXPECT_NEAR(a.energy, b.energy, 1e-12);
    }
}

TEST(encoding, zero_field_minimisers_closed_under_flip) {
    gen::Gen g(16);
    for (int t = 0; t < 60; ++t) {
        auto lat = g.lattice(2, 10);
        auto c = build_coefficients(g.features(lat.n_sites(), -3.0, 3.0), lat);
        std::fill(c.fields.begin(), c.fields.end(), 0.0);
        auto r = ground_state_gray(c);
        EXPECT_TRUE(r.degenerate);
        for (const auto &s : r.degenerate_set)
            EXPECT_NE(std::find(r.degenerate_set.begin(), r.degenerate_set.end(), flipped(s)), r.degenerate_set.end());
    }
}

TEST(encoding, af_dominance_on_bipartite_lattices) {
    gen::Gen g(17);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 2 * g.index(2, 6);
        auto lat = t % 2 ? build_chain(n) : build_square_ladder(n);
        auto r = ground_state_gray(build_coefficients(g.features(n, -1.0, 1.0), lat));
        ASSERT_FALSE(r.degenerate);
        ASSERT_TRUE(r.spin_string == af1_pattern(n) || r.spin_string == flipped(af1_pattern(n)));
    }
}

TEST(encoding, tie_tolerance_widens_the_set) {
    auto chain2 = build_chain(2);
    auto c = build_coefficients(std::vector<double>{1e-6, 0.0}, chain2);
    EXPECT_FALSE(ground_state_gray(c).degenerate);
    EXPECT_TRUE(ground_state_gray(c, 1e-5).degenerate);
    EXPECT_THROW(ground_state_gray(c, -1.0), Error);
    EXPECT_THROW(ground_state_naive(c, NAN), Error);
}

TEST(encoding, size_limits) {
    IsingCoefficients big{kNaiveMaxSites + 1, std::vector<double>(kNaiveMaxSites + 1, 0.0), {}, {}};
    EXPECT_THROW(ground_state_naive(big), Error);
    IsingCoefficients huge{kGrayMaxSites + 1, std::vector<double>(kGrayMaxSites + 1, 0.0), {}, {}};
    EXPECT_THROW(ground_state_gray(huge), Error);
}

TEST(encoding, twenty_site_grid_is_fast) {
    gen::Gen g(18);
    auto lat = build_triangle_grid(4, 5);
    auto c = build_coefficients(g.features(20, -1.0, 1.0), lat);
    const auto t0 = std::chrono::steady_clock::now();
    auto r = ground_state_gray(c);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_EQ(r.spin_string.size(), 20u);
    EXPECT_LT(ms, 2000.0);
    std::cout << "20-site triangle grid solved in " << ms << " ms\n";
}
