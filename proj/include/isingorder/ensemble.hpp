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

#ifndef ISINGORDER_ENSEMBLE_HPP
#define ISINGORDER_ENSEMBLE_HPP

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "isingorder/common.hpp"
#include "isingorder/order.hpp"

namespace isingorder {

/// Joint distribution over {AF1, AF2, R} x {0, 1}. Cell order:
/// (AF1,0) (AF2,0) (R,0) (AF1,1) (AF2,1) (R,1).
struct ClassDistribution {
    std::array<std::size_t, 6> counts{};
    std::array<double, 6> probabilities{};
    std::size_t n_train = 0;

    static constexpr std::size_t cell(OrderKind kind, int label) {
        return static_cast<std::size_t>(label) * 3 + static_cast<std::size_t>(kind);
    }

    double p(OrderKind kind, int label) const { return probabilities[cell(kind, label)]; }
    std::size_t count(OrderKind kind, int label) const { return counts[cell(kind, label)]; }
    std::size_t class_total(int label) const {
        return counts[cell(OrderKind::AF1, label)] + counts[cell(OrderKind::AF2, label)] +
               counts[cell(OrderKind::Residual, label)];
    }

    /// p(state | label) over (AF1, AF2, R).
    std::array<double, 3> conditional(int label) const {
        const std::size_t total = class_total(label);
        if (total == 0) throw Error("class " + std::to_string(label) + " has no samples");
        std::array<double, 3> out{};
        for (std::size_t k = 0; k < 3; ++k)
            out[k] = static_cast<double>(counts[static_cast<std::size_t>(label) * 3 + k]) / static_cast<double>(total);
        return out;
    }
};

inline ClassDistribution build_joint_distribution(std::span<const OrderLabel> labels, std::span<const int> classes) {
    if (labels.size() != classes.size())
        throw Error("order labels (" + std::to_string(labels.size()) + ") and classes (" +
                    std::to_string(classes.size()) + ") differ in length");
    if (labels.empty()) throw Error("cannot build a distribution from no samples");
    ClassDistribution d;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (classes[i] != 0 && classes[i] != 1) throw Error("class labels must be 0 or 1");
        ++d.counts[ClassDistribution::cell(labels[i].kind, classes[i])];
    }
    d.n_train = labels.size();
    for (std::size_t k = 0; k < 6; ++k)
        d.probabilities[k] = static_cast<double>(d.counts[k]) / static_cast<double>(d.n_train);
    return d;
}

/// argmax_y p(kind, y); nullopt (abstain) on a tie, including two empty cells.
inline std::optional<int> predict_label(const ClassDistribution &dist, const OrderLabel &order) {
    const auto c0 = dist.count(order.kind, 0);
    const auto c1 = dist.count(order.kind, 1);
    if (c0 == c1) return std::nullopt;
    return c0 > c1 ? 0 : 1;
}

/// Total variation distance 1/2 sum |p_i - q_i| between two normalised distributions.
inline double tvd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw Error("TVD inputs differ in length");
    double sp = 0.0, sq = 0.0, acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0.0 || q[i] < 0.0) throw Error("TVD inputs must be non-negative");
        sp += p[i];
        sq += q[i];
        acc += std::abs(p[i] - q[i]);
    }
    if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9) throw Error("TVD inputs must each sum to 1");
    return 0.5 * acc;
}

/// TVD between the two class-conditional state distributions.
inline double class_tvd(const ClassDistribution &dist) {
    const auto p = dist.conditional(0);
    const auto q = dist.conditional(1);
    return tvd(p, q);
}

}  // namespace isingorder

#endif  // ISINGORDER_ENSEMBLE_HPP
