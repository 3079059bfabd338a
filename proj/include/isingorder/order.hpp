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

#ifndef ISINGORDER_ORDER_HPP
#define ISINGORDER_ORDER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isingorder/common.hpp"
#include "isingorder/encoding.hpp"
#include "isingorder/lattice.hpp"

namespace isingorder {

enum class OrderKind { AF1 = 0, AF2 = 1, Residual = 2 };

inline std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::AF1: return "AF1";
        case OrderKind::AF2: return "AF2";
        case OrderKind::Residual: return "R";
    }
    return "?";
}

struct OrderLabel {
    OrderKind kind = OrderKind::Residual;
    std::optional<std::string> pattern_name;
    bool degenerate = false;
};

/// Mean of s_i s_{i+1} over the n-1 adjacent pairs in index order.
inline double chain_correlation(std::span<const Spin> s) {
    if (s.size() < 2) throw Error("chain correlation needs at least 2 spins");
    int sum = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) sum += s[i] * s[i + 1];
    return static_cast<double>(sum) / static_cast<double>(s.size() - 1);
}

/// Mean of s_i s_j over the lattice edges.
inline double lattice_correlation(std::span<const Spin> s, const LatticeGraph &lattice) {
    if (s.size() != lattice.n_sites())
        throw Error("spin string length " + std::to_string(s.size()) + " != lattice size " +
                    std::to_string(lattice.n_sites()));
    if (lattice.edges().empty()) throw Error("lattice has no edges");
    int sum = 0;
    for (const auto &e : lattice.edges()) sum += s[e.i] * s[e.j];
    return static_cast<double>(sum) / static_cast<double>(lattice.edges().size());
}

/// <Z_0> of a basis state: the first spin.
inline int parity(std::span<const Spin> s) {
    if (s.empty()) throw Error("parity of an empty spin string");
    return s[0];
}

inline bool is_alternating(std::span<const Spin> s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return false;
    return true;
}

/// AF1/AF2 when the ground state is unique and fully alternating along the
/// index chain (C = -1), told apart by the first spin; Residual otherwise.
inline OrderLabel classify_order(const GroundStateResult &result) {
    OrderLabel label;
    if (result.degenerate) {
        label.kind = OrderKind::Residual;
        label.degenerate = true;
        return label;
    }
    const auto &s = result.spin_string;
    // The pair sum is an integer, so C == -1 is exactly "every pair anti-aligned".
    if (s.size() >= 2 && is_alternating(s)) label.kind = parity(s) == 1 ? OrderKind::AF1 : OrderKind::AF2;
    return label;
}

/// Name of the first template equal to s or to its global flip.
inline std::optional<std::string> detect_2d_pattern(std::span<const Spin> s, const LatticeGraph &lattice,
                                                    const std::vector<SpinPattern> &templates) {
    if (s.size() != lattice.n_sites()) throw Error("spin string does not match lattice size");
    for (const auto &t : templates) {
        if (t.spins.size() != s.size()) throw Error("template '" + t.name + "' does not match lattice size");
        bool same = true, opposite = true;
        for (std::size_t i = 0; i < s.size() && (same || opposite); ++i) {
            same = same && t.spins[i] == s[i];
            opposite = opposite && t.spins[i] == -s[i];
        }
        if (same || opposite) return t.name;
    }
    return std::nullopt;
}

}  // namespace isingorder

#endif  // ISINGORDER_ORDER_HPP
