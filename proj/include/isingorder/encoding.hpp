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

#ifndef ISINGORDER_ENCODING_HPP
#define ISINGORDER_ENCODING_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "isingorder/common.hpp"
#include "isingorder/lattice.hpp"

namespace isingorder {

inline constexpr double kDefaultTieTol = 1e-9;
inline constexpr std::size_t kNaiveMaxSites = 24;
inline constexpr std::size_t kGrayMaxSites = 30;

/// Diagonal Ising Hamiltonian E(s) = sum_i h_i s_i + sum_(i,j) J_ij s_i s_j
/// for one data vector. couplings[e] belongs to edges[e].
struct IsingCoefficients {
    std::size_t n_sites = 0;
    std::vector<double> fields;
    std::vector<Edge> edges;
    std::vector<double> couplings;
};

/// ZZ feature-map coefficients: h_i = x_i, J_ij = (pi - x_i)(pi - x_j).
inline IsingCoefficients build_coefficients(std::span<const double> x, const LatticeGraph &lattice) {
    if (x.size() != lattice.n_sites())
        throw Error("data vector has " + std::to_string(x.size()) + " features but lattice has " +
                    std::to_string(lattice.n_sites()) + " sites");
    IsingCoefficients c;
    c.n_sites = lattice.n_sites();
    c.fields.assign(x.begin(), x.end());
    c.edges = lattice.edges();
    c.couplings.reserve(c.edges.size());
    for (const auto &e : c.edges) c.couplings.push_back((kPi - x[e.i]) * (kPi - x[e.j]));
    for (double v : c.fields)
        if (!std::isfinite(v)) throw Error("non-finite feature value");
    return c;
}

inline double energy(const IsingCoefficients &c, std::span<const Spin> s) {
    if (s.size() != c.n_sites)
        throw Error("spin string length " + std::to_string(s.size()) + " != " + std::to_string(c.n_sites));
    double e = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 1 && s[i] != -1) throw Error("spin string entries must be +1 or -1");
        e += c.fields[i] * s[i];
    }
    for (std::size_t k = 0; k < c.edges.size(); ++k) e += c.couplings[k] * s[c.edges[k].i] * s[c.edges[k].j];
    return e;
}

/// Basis index b <-> spin string, little-endian: s_i = 1 - 2 * bit_i(b).
inline SpinString spins_from_index(std::uint64_t b, std::size_t n) {
    SpinString s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = ((b >> i) & 1U) ? Spin{-1} : Spin{1};
    return s;
}

inline std::uint64_t index_from_spins(std::span<const Spin> s) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == -1) b |= (std::uint64_t{1} << i);
    return b;
}

/// Lexicographic order on spin strings with +1 before -1.
inline bool spin_string_less(const SpinString &a, const SpinString &b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() < b.size();
}

struct GroundStateResult {
    SpinString spin_string;  // lexicographically smallest minimiser
    double energy = 0.0;
    bool degenerate = false;
    std::vector<SpinString> degenerate_set;  // all minimisers within tie tolerance, sorted
};

namespace detail {

inline GroundStateResult finish_ground_state(const IsingCoefficients &c, const std::vector<std::uint64_t> &candidates,
                                             double tie_tol) {
    std::vector<std::pair<double, SpinString>> exact;
    exact.reserve(candidates.size());
    double best = std::numeric_limits<double>::infinity();
    for (auto b : candidates) {
        auto s = spins_from_index(b, c.n_sites);
        double e = energy(c, s);
        best = std::min(best, e);
        exact.emplace_back(e, std::move(s));
    }
    GroundStateResult r;
    for (auto &[e, s] : exact)
        if (e <= best + tie_tol) r.degenerate_set.push_back(std::move(s));
    std::sort(r.degenerate_set.begin(), r.degenerate_set.end(), spin_string_less);
    r.spin_string = r.degenerate_set.front();
    r.energy = energy(c, r.spin_string);
    r.degenerate = r.degenerate_set.size() > 1;
    return r;
}

inline void check_tie_tol(double tie_tol) {
    if (!(tie_tol >= 0.0) || !std::isfinite(tie_tol)) throw Error("tie tolerance must be finite and >= 0");
}

}  // namespace detail

/// Exhaustive minimisation, evaluating energy() on every one of the 2^n strings.
inline GroundStateResult ground_state_naive(const IsingCoefficients &c, double tie_tol = kDefaultTieTol) {
    if (c.n_sites == 0 || c.n_sites > kNaiveMaxSites)
        throw Error("naive solver supports 1.." + std::to_string(kNaiveMaxSites) + " sites, got " +
                    std::to_string(c.n_sites));
    detail::check_tie_tol(tie_tol);
    const std::uint64_t total = std::uint64_t{1} << c.n_sites;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, std::uint64_t>> window;
    SpinString s(c.n_sites);
    for (std::uint64_t b = 0; b < total; ++b) {
        for (std::size_t i = 0; i < c.n_sites; ++i) s[i] = ((b >> i) & 1U) ? Spin{-1} : Spin{1};
        const double e = energy(c, s);
        if (e > best + tie_tol) continue;
        if (e < best) {
            best = e;
            std::erase_if(window, [&](const auto &p) { return p.first > best + tie_tol; });
        }
        window.emplace_back(e, b);
    }
    std::vector<std::uint64_t> candidates;
    for (const auto &p : window) candidates.push_back(p.second);
    return detail::finish_ground_state(c, candidates, tie_tol);
}

/// Exhaustive minimisation in Gray-code order. Flipping spin k changes the
/// energy by -2 s_k (h_k + sum_j J_kj s_j), so each step costs O(deg k).
/// The running energy is resynchronised periodically and candidates are
/// re-scored with energy() at the end, so results match ground_state_naive
/// exactly.
inline GroundStateResult ground_state_gray(const IsingCoefficients &c, double tie_tol = kDefaultTieTol) {
    if (c.n_sites == 0 || c.n_sites > kGrayMaxSites)
        throw Error("Gray-code solver supports 1.." + std::to_string(kGrayMaxSites) + " sites, got " +
                    std::to_string(c.n_sites));
    detail::check_tie_tol(tie_tol);
    const std::size_t n = c.n_sites;

    struct Bond {
        std::size_t site;
        double coupling;
    };
    std::vector<std::vector<Bond>> bonds(n);
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        bonds[c.edges[k].i].push_back({c.edges[k].j, c.couplings[k]});
        bonds[c.edges[k].j].push_back({c.edges[k].i, c.couplings[k]});
    }

    constexpr std::uint64_t kResyncEvery = 1U << 12;
    constexpr double kDriftMargin = 1e-7;
    const double window_width = tie_tol + kDriftMargin;

    SpinString s(n, Spin{1});
    std::uint64_t code = 0;
    double e = energy(c, s);
    double best = e;
    std::vector<std::pair<double, std::uint64_t>> window{{e, code}};

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto k = static_cast<std::size_t>(std::countr_zero(step));
        double local = c.fields[k];
        for (const auto &bond : bonds[k]) local += bond.coupling * s[bond.site];
        e -= 2.0 * s[k] * local;
        s[k] = static_cast<Spin>(-s[k]);
        code ^= (std::uint64_t{1} << k);
        if (step % kResyncEvery == 0) e = energy(c, s);

        if (e > best + window_width) continue;
        if (e < best) {
            best = e;
            std::erase_if(window, [&](const auto &p) { return p.first > best + window_width; });
        }
        window.emplace_back(e, code);
    }
    std::vector<std::uint64_t> candidates;
    for (const auto &p : window) candidates.push_back(p.second);
    return detail::finish_ground_state(c, candidates, tie_tol);
}

}  // namespace isingorder

#endif  // ISINGORDER_ENCODING_HPP
