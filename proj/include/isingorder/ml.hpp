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

#ifndef ISINGORDER_ML_HPP
#define ISINGORDER_ML_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "isingorder/common.hpp"

namespace isingorder {

inline constexpr double kSvmC = 1.0;
inline constexpr double kSvmTol = 1e-3;
inline constexpr std::size_t kSvmMaxPasses = 10;

struct SvmModel {
    std::vector<double> alpha;  // dual coefficients in [0, C]
    std::vector<int> labels;    // +1 / -1
    double bias = 0.0;
    double c = kSvmC;
    std::vector<std::size_t> support;  // indices with alpha > 0
    bool kernel_clipped = false;       // negative eigenvalues were projected out

    /// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
    double dual_objective(const Eigen::MatrixXd &kernel) const {
        double lin = 0.0, quad = 0.0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            lin += alpha[i];
            for (std::size_t j = 0; j < alpha.size(); ++j)
                quad += alpha[i] * alpha[j] * labels[i] * labels[j] *
                        kernel(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        return lin - 0.5 * quad;
    }
};

/// Symmetric part of k with eigenvalues below zero clamped to zero.
inline Eigen::MatrixXd clip_to_psd(const Eigen::MatrixXd &k) {
    const Eigen::MatrixXd sym = 0.5 * (k + k.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0);
    return solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().transpose();
}

inline double min_eigenvalue(const Eigen::MatrixXd &k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (k + k.transpose()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

/// Simplified SMO on a precomputed kernel: for each KKT violator i a random
/// partner j is drawn and the pair is optimised analytically, falling back to
/// the other partners when that pair is stuck. Training stops after
/// max_passes consecutive sweeps without any update.
inline SvmModel svm_train(const Eigen::MatrixXd &kernel, std::span<const int> labels, double c = kSvmC,
                          double tol = kSvmTol, std::size_t max_passes = kSvmMaxPasses, std::uint64_t seed = 0) {
    const std::size_t m = labels.size();
    if (kernel.rows() != kernel.cols() || static_cast<std::size_t>(kernel.rows()) != m)
        throw Error("kernel must be square and match the label count");
    if (!(c > 0.0) || !(tol > 0.0) || max_passes == 0) throw Error("SVM needs C > 0, tol > 0, max_passes >= 1");
    bool has_pos = false, has_neg = false;
    for (int y : labels) {
        if (y != 1 && y != -1) throw Error("SVM labels must be +1 or -1");
        (y == 1 ? has_pos : has_neg) = true;
    }
    if (!has_pos || !has_neg) throw Error("SVM training needs both classes");

    SvmModel model;
    model.c = c;
    model.labels.assign(labels.begin(), labels.end());
    model.alpha.assign(m, 0.0);

    Eigen::MatrixXd k = kernel;
    if (min_eigenvalue(k) < -1e-6) {
        std::cerr << "warning: kernel is not positive semidefinite; clipping negative eigenvalues\n";
        k = clip_to_psd(k);
        model.kernel_clipped = true;
    }
    auto K = [&k](std::size_t i, std::size_t j) { return k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); };

    auto &alpha = model.alpha;
    double b = 0.0;
    // f[i] = sum_j alpha_j y_j K_ji + b, kept incrementally.
    std::vector<double> f(m, 0.0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 2);

    constexpr double kMinStep = 1e-12;
    // Optimises the pair (i, j) analytically; false when no progress is possible.
    auto take_step = [&](std::size_t i, std::size_t j) {
        const double yi = labels[i], yj = labels[j];
        const double ei = f[i] - yi, ej = f[j] - yj;
        const double ai_old = alpha[i], aj_old = alpha[j];

        double lo, hi;
        if (labels[i] != labels[j]) {
            lo = std::max(0.0, aj_old - ai_old);
            hi = std::min(c, c + aj_old - ai_old);
        } else {
            lo = std::max(0.0, ai_old + aj_old - c);
            hi = std::min(c, ai_old + aj_old);
        }
        if (hi - lo < kMinStep) return false;
        const double eta = 2.0 * K(i, j) - K(i, i) - K(j, j);
        if (eta >= 0.0) return false;

        const double aj = std::clamp(aj_old - yj * (ei - ej) / eta, lo, hi);
        if (std::abs(aj - aj_old) < kMinStep) return false;
        const double ai = std::clamp(ai_old + yi * yj * (aj_old - aj), 0.0, c);

        const double dai = ai - ai_old, daj = aj - aj_old;
        const double b1 = b - ei - yi * dai * K(i, i) - yj * daj * K(i, j);
        const double b2 = b - ej - yi * dai * K(i, j) - yj * daj * K(j, j);
        double b_new;
        if (ai > 0.0 && ai < c)
            b_new = b1;
        else if (aj > 0.0 && aj < c)
            b_new = b2;
        else
            b_new = 0.5 * (b1 + b2);

        for (std::size_t t = 0; t < m; ++t) f[t] += yi * dai * K(i, t) + yj * daj * K(j, t) + (b_new - b);
        alpha[i] = ai;
        alpha[j] = aj;
        b = b_new;
        return true;
    };

    const std::size_t max_sweeps = 20000;
    std::size_t passes = 0;
    for (std::size_t sweep = 0; passes < max_passes && sweep < max_sweeps; ++sweep) {
        std::size_t changed = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const double yi = labels[i];
            const double ri = yi * (f[i] - yi);
            if (!((ri < -tol && alpha[i] < c) || (ri > tol && alpha[i] > 0.0))) continue;

            // Random partner first, then the rest in cyclic order from there.
            const std::size_t start = pick(rng);
            for (std::size_t t = 0; t + 1 < m; ++t) {
                std::size_t j = (start + t) % (m - 1);
                if (j >= i) ++j;
                if (take_step(i, j)) {
                    ++changed;
                    break;
                }
            }
        }
        passes = changed == 0 ? passes + 1 : 0;
    }

    // Bias from the free support vectors when any exist.
    double acc = 0.0;
    std::size_t free = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (alpha[i] > 1e-8 && alpha[i] < c - 1e-8) {
            acc += labels[i] - (f[i] - b);
            ++free;
        }
    }
    model.bias = free > 0 ? acc / static_cast<double>(free) : b;
    for (std::size_t i = 0; i < m; ++i)
        if (alpha[i] > 0.0) model.support.push_back(i);
    return model;
}

/// sum_i alpha_i y_i K(x_i, x) + b; the sign is the predicted class.
inline double svm_decision(const SvmModel &model, std::span<const double> kernel_row) {
    if (kernel_row.size() != model.alpha.size())
        throw Error("kernel row has " + std::to_string(kernel_row.size()) + " entries, model has " +
                    std::to_string(model.alpha.size()) + " training points");
    double acc = model.bias;
    for (auto i : model.support) acc += model.alpha[i] * model.labels[i] * kernel_row[i];
    return acc;
}

/// Mann-Whitney AUC: P(score(pos) > score(neg)), ties counted 1/2.
inline double roc_auc(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) throw Error("scores and labels differ in length");
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Average 1-based ranks over tied groups.
    std::vector<double> rank(n);
    for (std::size_t lo = 0; lo < n;) {
        std::size_t hi = lo;
        while (hi + 1 < n && scores[order[hi + 1]] == scores[order[lo]]) ++hi;
        const double avg = 0.5 * static_cast<double>(lo + hi) + 1.0;
        for (std::size_t t = lo; t <= hi; ++t) rank[order[t]] = avg;
        lo = hi + 1;
    }
    double pos_rank = 0.0;
    std::size_t n_pos = 0, n_neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] == 1) {
            pos_rank += rank[i];
            ++n_pos;
        } else if (labels[i] == 0) {
            ++n_neg;
        } else {
            throw Error("AUC labels must be 0 or 1");
        }
    }
    if (n_pos == 0 || n_neg == 0) throw Error("AUC needs both classes present");
    const double np = static_cast<double>(n_pos), nn = static_cast<double>(n_neg);
    return (pos_rank - np * (np + 1.0) / 2.0) / (np * nn);
}

}  // namespace isingorder

#endif  // ISINGORDER_ML_HPP
