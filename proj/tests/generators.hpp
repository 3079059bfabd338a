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


// Hand-rolled random generators for the property tests.

#ifndef ISINGORDER_TESTS_GENERATORS_HPP
#define ISINGORDER_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "isingorder/common.hpp"
#include "isingorder/dataio.hpp"
#include "isingorder/lattice.hpp"

namespace gen {

struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }
    bool coin() { return index(0, 1) == 1; }

    std::vector<double> features(std::size_t n, double lo, double hi) {
        std::vector<double> x(n);
        for (auto &v : x) v = uniform(lo, hi);
        return x;
    }

    isingorder::SpinString spins(std::size_t n) {
        isingorder::SpinString s(n);
        for (auto &v : s) v = coin() ? isingorder::Spin{1} : isingorder::Spin{-1};
        return s;
    }

    std::vector<double> probabilities(std::size_t k) {
        std::vector<double> p(k);
        double sum = 0.0;
        for (auto &v : p) sum += (v = uniform(0.0, 1.0));
        for (auto &v : p) v /= sum;
        return p;
    }

    /// A lattice of a random kind whose size lies in [lo, hi], when one exists.
    isingorder::LatticeGraph lattice(std::size_t lo, std::size_t hi) {
        using isingorder::LatticeKind;
        for (;;) {
            const auto kind = static_cast<LatticeKind>(index(0, 3));
            const std::size_t n = index(lo, hi);
            switch (kind) {
                case LatticeKind::Chain:
                    return isingorder::build_chain(n);
                case LatticeKind::SquareLadder:
                    if (n >= 4 && n % 2 == 0) return isingorder::build_square_ladder(n);
                    break;
                case LatticeKind::TriangleLadder:
                    if (n >= 3) return isingorder::build_triangle_ladder(n);
                    break;
                case LatticeKind::TriangleGrid:
                    for (std::size_t rows : {2, 3})
                        if (n % rows == 0 && n / rows >= 2) return isingorder::build_triangle_grid(rows, n / rows);
                    break;
            }
        }
    }

    isingorder::DataSet dataset(std::size_t rows, std::size_t cols, double lo, double hi) {
        isingorder::DataSet d;
        for (std::size_t j = 0; j < cols; ++j) d.feature_names.push_back("c" + std::to_string(j));
        for (std::size_t i = 0; i < rows; ++i) d.samples.push_back({features(cols, lo, hi), static_cast<int>(i % 2)});
        return d;
    }

    std::mt19937_64 rng;
};

}  // namespace gen

#endif  // ISINGORDER_TESTS_GENERATORS_HPP
