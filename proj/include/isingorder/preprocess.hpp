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

#ifndef ISINGORDER_PREPROCESS_HPP
#define ISINGORDER_PREPROCESS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "isingorder/common.hpp"
#include "isingorder/dataio.hpp"

namespace isingorder {

/// Principal axes of a training set. components[k] is a unit vector in the
/// original feature space; explained_variance[k] is the matching eigenvalue
/// of the (n-1)-normalised sample covariance, in non-increasing order.
struct PcaModel {
    std::vector<double> means;
    std::vector<std::vector<double>> components;
    std::vector<double> explained_variance;

    std::size_t n_components() const { return components.size(); }
    std::size_t n_features() const { return means.size(); }
};

inline PcaModel pca_fit(const DataSet &train, std::size_t n_components) {
    train.validate();
    const std::size_t n = train.size();
    const std::size_t d = train.n_features();
    if (n < 2) throw Error("PCA needs at least 2 samples");
    if (n_components == 0 || n_components > std::min(n, d))
        throw Error("n_components " + std::to_string(n_components) + " must lie in [1, min(n_samples, n_features) = " +
                    std::to_string(std::min(n, d)) + "]");

    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = train.samples[i].features[j];
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    const Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(n - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw Error("covariance eigendecomposition failed");
    // Eigen returns ascending eigenvalues.
    const Eigen::VectorXd evals = solver.eigenvalues().reverse();
    const Eigen::MatrixXd evecs = solver.eigenvectors().rowwise().reverse();

    const double top = std::max(evals(0), 0.0);
    const double rank_tol = std::max(top, 1.0) * static_cast<double>(d) * 1e-12;
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < evals.size(); ++k)
        if (evals(k) > rank_tol) ++rank;
    if (rank < n_components)
        throw Error("training data has rank " + std::to_string(rank) + ", fewer than the " +
                    std::to_string(n_components) + " requested components");

    PcaModel model;
    model.means.assign(mean.data(), mean.data() + d);
    for (std::size_t k = 0; k < n_components; ++k) {
        std::vector<double> v(d);
        std::size_t argmax = 0;
        for (std::size_t j = 0; j < d; ++j) {
            v[j] = evecs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
            if (std::abs(v[j]) > std::abs(v[argmax]) + 1e-12) argmax = j;
        }
        if (v[argmax] < 0)
            for (auto &e : v) e = -e;
        model.components.push_back(std::move(v));
        model.explained_variance.push_back(evals(static_cast<Eigen::Index>(k)));
    }
    return model;
}

inline std::vector<double> pca_project(const PcaModel &model, std::span<const double> features) {
    if (features.size() != model.n_features())
        throw Error("feature width " + std::to_string(features.size()) + " does not match PCA model width " +
                    std::to_string(model.n_features()));
    std::vector<double> out(model.n_components(), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < features.size(); ++j) acc += (features[j] - model.means[j]) * model.components[k][j];
        out[k] = acc;
    }
    return out;
}

/// Maps projections back to the original feature space (mean + sum_k y_k v_k).
inline std::vector<double> pca_reconstruct(const PcaModel &model, std::span<const double> projection) {
    if (projection.size() != model.n_components()) throw Error("projection width does not match PCA model");
    std::vector<double> out = model.means;
    for (std::size_t k = 0; k < projection.size(); ++k)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += projection[k] * model.components[k][j];
    return out;
}

inline DataSet pca_transform(const PcaModel &model, const DataSet &data) {
    DataSet out;
    for (std::size_t k = 0; k < model.n_components(); ++k) out.feature_names.push_back("pc" + std::to_string(k));
    out.samples.reserve(data.size());
    for (const auto &s : data.samples) out.samples.push_back({pca_project(model, s.features), s.label});
    return out;
}

/// Per-component min/max fitted on training data; apply maps [min, max]
/// linearly onto [-a, a]. Test data is not clipped.
struct ScalerModel {
    std::vector<double> mins;
    std::vector<double> maxs;
    double a = 1.0;
};

inline ScalerModel scaler_fit(const DataSet &train, double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw Error("scaling factor a must be a finite positive number");
    train.validate();
    ScalerModel m;
    m.a = a;
    const std::size_t d = train.n_features();
    m.mins.assign(d, std::numeric_limits<double>::infinity());
    m.maxs.assign(d, -std::numeric_limits<double>::infinity());
    for (const auto &s : train.samples)
        for (std::size_t j = 0; j < d; ++j) {
            m.mins[j] = std::min(m.mins[j], s.features[j]);
            m.maxs[j] = std::max(m.maxs[j], s.features[j]);
        }
    return m;
}

inline DataSet scaler_apply(const ScalerModel &model, const DataSet &data) {
    DataSet out = data;
    for (auto &s : out.samples) {
        if (s.features.size() != model.mins.size()) throw Error("feature width does not match scaler");
        for (std::size_t j = 0; j < s.features.size(); ++j) {
            const double range = model.maxs[j] - model.mins[j];
            // unit value in [-1, 1] on the training range, then stretched by a
            const double unit = range > 0.0 ? 2.0 * ((s.features[j] - model.mins[j]) / range) - 1.0 : 0.0;
            s.features[j] = model.a * unit;
        }
    }
    return out;
}

inline DataSet scaler_fit_apply(const DataSet &train, double a, const DataSet &data) {
    return scaler_apply(scaler_fit(train, a), data);
}

/// Adds i.i.d. N(0, sigma^2) to every feature. Labels are untouched.
inline DataSet add_noise(const DataSet &data, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0)) throw Error("noise sigma must be >= 0");
    DataSet out = data;
    if (sigma == 0.0) return out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, sigma);
    for (auto &s : out.samples)
        for (auto &v : s.features) v += gauss(rng);
    return out;
}

}  // namespace isingorder

#endif  // ISINGORDER_PREPROCESS_HPP
