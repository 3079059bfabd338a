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

// Experiment drivers: dataset preparation, the encode/solve/classify
// pipeline, and the feature, scaling, noise and measurement sweeps.

#ifndef ISINGORDER_EXPERIMENT_HPP
#define ISINGORDER_EXPERIMENT_HPP

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isingorder/common.hpp"
#include "isingorder/dataio.hpp"
#include "isingorder/encoding.hpp"
#include "isingorder/ensemble.hpp"
#include "isingorder/lattice.hpp"
#include "isingorder/ml.hpp"
#include "isingorder/order.hpp"
#include "isingorder/preprocess.hpp"
#include "isingorder/quantum.hpp"

namespace isingorder {

/// Invalid or inconsistent experiment configuration (CLI exit code 1).
class ConfigError : public Error {
   public:
    using Error::Error;
};

struct ExperimentConfig {
    // dataset
    std::string dataset = "synthetic";  // synthetic | csv
    std::string csv_path;
    std::string label_column = "label";
    std::string positive_label = "1";
    std::size_t synth_per_class = 500;
    std::size_t synth_features = 8;
    double synth_separation = 1.0;
    std::size_t subset = 200;
    double train_fraction = 0.75;

    // encoding
    LatticeKind lattice = LatticeKind::Chain;
    std::size_t grid_rows = 3;
    std::string solver = "gray";  // gray | naive
    double tie_tol = kDefaultTieTol;

    // sweeps
    std::vector<std::size_t> features{2, 3, 4, 5, 6, 7, 8};
    std::size_t n_qubits = 4;  // fixed width for scaling, noise and measure
    double a = 1.0;
    std::vector<double> scales{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0,
                               2.25, 2.5, 2.75, 3.0, 3.25, 3.5, 3.75, 4.0};
    std::vector<double> sigmas{0.0, 0.1, 0.25, 0.5, 1.0, 2.0};
    std::size_t realizations = 20;

    // measurement
    std::uint64_t shots = 10000;
    std::size_t measure_samples = 20;

    // quantum kernel SVM
    bool qsvc = false;
    double svm_c = kSvmC;
    double svm_tol = kSvmTol;
    std::size_t svm_max_passes = kSvmMaxPasses;

    std::uint64_t seed = 42;
    std::string output_dir = "out";
    bool timing = true;
    bool svg = true;
    unsigned threads = 0;
};

namespace detail {

inline std::string trim_copy(std::string_view s) { return std::string(trim(s)); }

inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

template <typename T>
std::string join(const std::vector<T> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        if constexpr (std::is_floating_point_v<T>)
            out += format_double(v[i]);
        else
            out += std::to_string(v[i]);
    }
    return out;
}

inline double parse_real(const std::string &key, const std::string &text) {
    double v = 0.0;
    if (!parse_finite(text, v)) throw ConfigError("config key '" + key + "': '" + text + "' is not a finite number");
    return v;
}

inline std::uint64_t parse_count(const std::string &key, const std::string &text) {
    const auto t = trim(text);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw ConfigError("config key '" + key + "': '" + text + "' is not a non-negative integer");
    return v;
}

inline bool parse_bool(const std::string &key, const std::string &text) {
    const auto t = trim_copy(text);
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw ConfigError("config key '" + key + "': '" + text + "' is not a boolean");
}

inline std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!trim(cur).empty()) out.push_back(trim_copy(cur));
    return out;
}

/// "2,3,4" or an inclusive range "2-8".
inline std::vector<std::size_t> parse_count_list(const std::string &key, const std::string &text) {
    std::vector<std::size_t> out;
    for (const auto &item : split_list(text)) {
        auto dash = item.find('-');
        if (dash != std::string::npos && dash > 0) {
            auto lo = parse_count(key, item.substr(0, dash));
            auto hi = parse_count(key, item.substr(dash + 1));
            if (hi < lo) throw ConfigError("config key '" + key + "': empty range '" + item + "'");
            for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<std::size_t>(v));
        } else {
            out.push_back(static_cast<std::size_t>(parse_count(key, item)));
        }
    }
    return out;
}

inline std::vector<double> parse_real_list(const std::string &key, const std::string &text) {
    std::vector<double> out;
    for (const auto &item : split_list(text)) out.push_back(parse_real(key, item));
    return out;
}

}  // namespace detail

/// Parses "key = value" lines; '#' starts a comment. Later keys win.
inline std::map<std::string, std::string> parse_key_values(std::istream &in, const std::string &origin = "config") {
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (detail::trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value, got '" +
                              detail::trim_copy(line) + "'");
        auto key = detail::trim_copy(std::string_view(line).substr(0, eq));
        if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = detail::trim_copy(std::string_view(line).substr(eq + 1));
    }
    return kv;
}

inline std::map<std::string, std::string> load_key_values(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_key_values(in, path);
}

/// Applies key/value pairs onto a config. Unknown keys are rejected.
inline void apply_key_values(ExperimentConfig &cfg, const std::map<std::string, std::string> &kv) {
    using namespace detail;
    for (const auto &[key, value] : kv) {
        if (key == "dataset") cfg.dataset = value;
        else if (key == "csv_path") cfg.csv_path = value;
        else if (key == "label_column") cfg.label_column = value;
        else if (key == "positive_label") cfg.positive_label = value;
        else if (key == "synth_per_class") cfg.synth_per_class = parse_count(key, value);
        else if (key == "synth_features") cfg.synth_features = parse_count(key, value);
        else if (key == "synth_separation") cfg.synth_separation = parse_real(key, value);
        else if (key == "subset") cfg.subset = parse_count(key, value);
        else if (key == "train_fraction") cfg.train_fraction = parse_real(key, value);
        else if (key == "lattice") {
            try {
                cfg.lattice = parse_lattice_kind(value);
            } catch (const Error &e) {
                throw ConfigError(e.what());
            }
        } else if (key == "grid_rows") cfg.grid_rows = parse_count(key, value);
        else if (key == "solver") cfg.solver = value;
        else if (key == "tie_tol") cfg.tie_tol = parse_real(key, value);
        else if (key == "features") cfg.features = parse_count_list(key, value);
        else if (key == "n_qubits") cfg.n_qubits = parse_count(key, value);
        else if (key == "a") cfg.a = parse_real(key, value);
        else if (key == "scales") cfg.scales = parse_real_list(key, value);
        else if (key == "sigmas") cfg.sigmas = parse_real_list(key, value);
        else if (key == "realizations") cfg.realizations = parse_count(key, value);
        else if (key == "shots") cfg.shots = parse_count(key, value);
        else if (key == "measure_samples") cfg.measure_samples = parse_count(key, value);
        else if (key == "qsvc") cfg.qsvc = parse_bool(key, value);
        else if (key == "svm_c") cfg.svm_c = parse_real(key, value);
        else if (key == "svm_tol") cfg.svm_tol = parse_real(key, value);
        else if (key == "svm_max_passes") cfg.svm_max_passes = parse_count(key, value);
        else if (key == "seed") cfg.seed = parse_count(key, value);
        else if (key == "output_dir") cfg.output_dir = value;
        else if (key == "timing") cfg.timing = parse_bool(key, value);
        else if (key == "svg") cfg.svg = parse_bool(key, value);
        else if (key == "threads") cfg.threads = static_cast<unsigned>(parse_count(key, value));
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

/// The resolved config as key/value pairs; feeding it back through
/// apply_key_values reproduces the same config.
inline std::map<std::string, std::string> to_key_values(const ExperimentConfig &c) {
    using detail::format_double;
    using detail::join;
    return {
        {"dataset", c.dataset},
        {"csv_path", c.csv_path},
        {"label_column", c.label_column},
        {"positive_label", c.positive_label},
        {"synth_per_class", std::to_string(c.synth_per_class)},
        {"synth_features", std::to_string(c.synth_features)},
        {"synth_separation", format_double(c.synth_separation)},
        {"subset", std::to_string(c.subset)},
        {"train_fraction", format_double(c.train_fraction)},
        {"lattice", to_string(c.lattice)},
        {"grid_rows", std::to_string(c.grid_rows)},
        {"solver", c.solver},
        {"tie_tol", format_double(c.tie_tol)},
        {"features", join(c.features)},
        {"n_qubits", std::to_string(c.n_qubits)},
        {"a", format_double(c.a)},
        {"scales", join(c.scales)},
        {"sigmas", join(c.sigmas)},
        {"realizations", std::to_string(c.realizations)},
        {"shots", std::to_string(c.shots)},
        {"measure_samples", std::to_string(c.measure_samples)},
        {"qsvc", c.qsvc ? "true" : "false"},
        {"svm_c", format_double(c.svm_c)},
        {"svm_tol", format_double(c.svm_tol)},
        {"svm_max_passes", std::to_string(c.svm_max_passes)},
        {"seed", std::to_string(c.seed)},
        {"output_dir", c.output_dir},
        {"timing", c.timing ? "true" : "false"},
        {"svg", c.svg ? "true" : "false"},
        {"threads", std::to_string(c.threads)},
    };
}

enum class SweepKind { Features, Scaling, Noise, Measure };

/// Checks everything that can be checked without touching the data.
inline void validate_config(const ExperimentConfig &c, SweepKind kind) {
    auto fail = [](const std::string &m) { throw ConfigError(m); };
    if (c.dataset == "csv") {
        if (c.csv_path.empty()) fail("dataset=csv requires csv_path");
        if (!std::filesystem::exists(c.csv_path)) fail("csv_path '" + c.csv_path + "' does not exist");
        if (c.label_column.empty()) fail("label_column must not be empty");
    } else if (c.dataset == "synthetic") {
        if (c.synth_per_class < 1 || c.synth_features < 1) fail("synthetic dataset needs synth_per_class, synth_features >= 1");
        if (c.synth_separation < 0) fail("synth_separation must be >= 0");
    } else {
        fail("dataset must be 'synthetic' or 'csv', got '" + c.dataset + "'");
    }
    if (c.subset < 4 || c.subset % 2 != 0) fail("subset must be an even count >= 4");
    if (!(c.train_fraction > 0 && c.train_fraction < 1)) fail("train_fraction must lie in (0, 1)");
    if (c.solver != "gray" && c.solver != "naive") fail("solver must be 'gray' or 'naive'");
    if (c.tie_tol < 0) fail("tie_tol must be >= 0");
    if (!(c.a > 0)) fail("a must be > 0");
    if (c.output_dir.empty()) fail("output_dir must not be empty");

    auto check_width = [&](std::size_t n) {
        const std::size_t limit = c.qsvc ? kMaxQubits : (c.solver == "gray" ? kGrayMaxSites : kNaiveMaxSites);
        if (n > limit) fail("feature count " + std::to_string(n) + " exceeds the solver limit " + std::to_string(limit));
        try {
            (void)build_lattice(c.lattice, n, c.grid_rows);
        } catch (const Error &e) {
            fail("feature count " + std::to_string(n) + " is invalid for lattice " + to_string(c.lattice) + ": " +
                 e.what());
        }
    };
    auto check_synth_width = [&](std::size_t n) {
        if (c.dataset == "synthetic" && n > c.synth_features)
            fail("feature count " + std::to_string(n) + " exceeds synth_features " + std::to_string(c.synth_features));
    };
    if (kind == SweepKind::Features)
        for (auto n : c.features) check_synth_width(n);
    else
        check_synth_width(c.n_qubits);
    switch (kind) {
        case SweepKind::Features:
            if (c.features.empty()) fail("features list must not be empty");
            for (auto n : c.features) check_width(n);
            if (c.qsvc && (!(c.svm_c > 0) || !(c.svm_tol > 0) || c.svm_max_passes == 0))
                fail("svm_c, svm_tol must be > 0 and svm_max_passes >= 1");
            break;
        case SweepKind::Scaling:
            check_width(c.n_qubits);
            if (c.scales.empty()) fail("scales list must not be empty");
            for (std::size_t i = 0; i < c.scales.size(); ++i) {
                if (!(c.scales[i] > 0)) fail("scales must be > 0");
                if (i && c.scales[i] <= c.scales[i - 1]) fail("scales must be sorted ascending");
            }
            break;
        case SweepKind::Noise:
            check_width(c.n_qubits);
            if (c.sigmas.empty()) fail("sigmas list must not be empty");
            for (std::size_t i = 0; i < c.sigmas.size(); ++i) {
                if (c.sigmas[i] < 0) fail("sigmas must be >= 0");
                if (i && c.sigmas[i] <= c.sigmas[i - 1]) fail("sigmas must be sorted ascending");
            }
            if (c.realizations < 1) fail("realizations must be >= 1");
            break;
        case SweepKind::Measure:
            check_width(c.n_qubits);
            if (c.n_qubits < 2) fail("measurement needs n_qubits >= 2");
            if (c.n_qubits > kMaxQubits) fail("measurement supports at most " + std::to_string(kMaxQubits) + " qubits");
            if (c.shots < 1) fail("shots must be >= 1");
            if (c.measure_samples < 1) fail("measure_samples must be >= 1");
            break;
    }
}

/// Tags for sub-seeds derived from the master seed.
enum class SeedTag : std::uint64_t { Synth = 1, Balance = 2, Split = 3, Noise = 4, Svm = 5, Measure = 6 };

inline std::uint64_t sub_seed(const ExperimentConfig &c, SeedTag tag, std::uint64_t a = 0, std::uint64_t b = 0) {
    return derive_seed(c.seed ^ (static_cast<std::uint64_t>(tag) << 56), a, b);
}

struct PreparedData {
    DataSet train;
    DataSet test;
};

/// Load or synthesise, balance-downsample to `subset`, then stratified split.
inline PreparedData prepare_data(const ExperimentConfig &c) {
    DataSet raw = c.dataset == "csv" ? load_csv(c.csv_path, c.label_column, c.positive_label)
                                     : synth_generate(c.synth_per_class, c.synth_features, c.synth_separation,
                                                      sub_seed(c, SeedTag::Synth));
    raw.validate();
    DataSet subset = balance_downsample(raw, c.subset, sub_seed(c, SeedTag::Balance));
    auto [train, test] = train_test_split(subset, c.train_fraction, sub_seed(c, SeedTag::Split));
    return {std::move(train), std::move(test)};
}

/// PCA to n components and (-a, a) scaling, both fitted on train.
inline PreparedData reduce_and_scale(const PreparedData &data, std::size_t n_components, double a) {
    if (n_components > data.train.n_features())
        throw ConfigError("feature count " + std::to_string(n_components) + " exceeds the dataset width " +
                          std::to_string(data.train.n_features()));
    const auto pca = pca_fit(data.train, n_components);
    const DataSet train_pc = pca_transform(pca, data.train);
    const DataSet test_pc = pca_transform(pca, data.test);
    const auto scaler = scaler_fit(train_pc, a);
    return {scaler_apply(scaler, train_pc), scaler_apply(scaler, test_pc)};
}

struct SweepRecord {
    double sweep_value = 0.0;
    std::array<double, 6> cells{};  // ClassDistribution cell order
    double tvd = 0.0;
    double mean_corr = 0.0;
    double p_residual = 0.0;
    double degeneracy_rate = 0.0;
    double abstain_rate = 0.0;
    std::optional<double> auc;
    double wall_ms = 0.0;
    std::map<std::string, std::size_t> patterns;  // triangle-grid template hits on train
};

inline constexpr const char *kSweepCsvHeader =
    "sweep_value,p_af1_0,p_af2_0,p_r_0,p_af1_1,p_af2_1,p_r_1,tvd,mean_corr,p_residual,degeneracy_rate,abstain_rate,"
    "auc,wall_ms";

struct EncodedSample {
    GroundStateResult ground;
    OrderLabel order;
};

inline std::vector<EncodedSample> encode_and_classify(const DataSet &data, const LatticeGraph &lattice,
                                                      const ExperimentConfig &c) {
    std::vector<EncodedSample> out(data.size());
    const auto templates = lattice.kind() == LatticeKind::TriangleGrid ? reference_patterns(lattice)
                                                                        : std::vector<SpinPattern>{};
    parallel_for(
        data.size(),
        [&](std::size_t i) {
            const auto coeffs = build_coefficients(data.samples[i].features, lattice);
            out[i].ground = c.solver == "naive" ? ground_state_naive(coeffs, c.tie_tol)
                                                : ground_state_gray(coeffs, c.tie_tol);
            out[i].order = classify_order(out[i].ground);
            if (!templates.empty() && !out[i].ground.degenerate)
                out[i].order.pattern_name = detect_2d_pattern(out[i].ground.spin_string, lattice, templates);
        },
        c.threads);
    return out;
}

/// Ground-state ensemble on train, label prediction on test, optional QSVC.
inline SweepRecord evaluate(const PreparedData &data, const LatticeGraph &lattice, const ExperimentConfig &c,
                            double sweep_value, std::uint64_t svm_seed) {
    const auto start = std::chrono::steady_clock::now();
    SweepRecord rec;
    rec.sweep_value = sweep_value;

    const auto train = encode_and_classify(data.train, lattice, c);
    std::vector<OrderLabel> orders;
    orders.reserve(train.size());
    double corr = 0.0;
    std::size_t degenerate = 0;
    for (const auto &e : train) {
        orders.push_back(e.order);
        corr += chain_correlation(e.ground.spin_string);
        degenerate += e.ground.degenerate ? 1 : 0;
        if (e.order.pattern_name) ++rec.patterns[*e.order.pattern_name];
    }
    const auto classes = data.train.labels();
    const auto dist = build_joint_distribution(orders, classes);
    rec.cells = dist.probabilities;
    rec.tvd = class_tvd(dist);
    rec.mean_corr = corr / static_cast<double>(train.size());
    rec.p_residual = dist.p(OrderKind::Residual, 0) + dist.p(OrderKind::Residual, 1);
    rec.degeneracy_rate = static_cast<double>(degenerate) / static_cast<double>(train.size());

    const auto test = encode_and_classify(data.test, lattice, c);
    std::size_t abstained = 0;
    for (const auto &e : test) abstained += predict_label(dist, e.order).has_value() ? 0 : 1;
    rec.abstain_rate = test.empty() ? 0.0 : static_cast<double>(abstained) / static_cast<double>(test.size());

    if (c.qsvc) {
        const auto k_train = kernel_matrix(data.train, lattice, c.threads);
        std::vector<int> y;
        for (int l : classes) y.push_back(l == 1 ? 1 : -1);
        const auto model = svm_train(k_train, y, c.svm_c, c.svm_tol, c.svm_max_passes, svm_seed);
        const auto k_test = kernel_cross(data.test, data.train, lattice, c.threads);
        std::vector<double> scores(data.test.size());
        std::vector<double> row(data.train.size());
        for (std::size_t i = 0; i < data.test.size(); ++i) {
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = k_test(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            scores[i] = svm_decision(model, row);
        }
        rec.auc = roc_auc(scores, data.test.labels());
    }
    if (c.timing)
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

inline std::vector<SweepRecord> run_feature_sweep(const ExperimentConfig &c) {
    validate_config(c, SweepKind::Features);
    const auto data = prepare_data(c);
    std::vector<SweepRecord> out;
    for (auto n : c.features) {
        const auto lattice = build_lattice(c.lattice, n, c.grid_rows);
        out.push_back(evaluate(reduce_and_scale(data, n, c.a), lattice, c, static_cast<double>(n),
                               sub_seed(c, SeedTag::Svm, n)));
    }
    return out;
}

struct ScalingResult {
    std::vector<SweepRecord> records;
    std::optional<double> a0;  // smallest a with mean C > -1 + threshold
};

inline constexpr double kTransitionThreshold = 0.01;

inline std::optional<double> estimate_transition(const std::vector<SweepRecord> &records,
                                                 double threshold = kTransitionThreshold) {
    for (const auto &r : records)
        if (r.mean_corr > -1.0 + threshold) return r.sweep_value;
    return std::nullopt;
}

inline ScalingResult run_scaling_sweep(const ExperimentConfig &c) {
    validate_config(c, SweepKind::Scaling);
    const auto data = prepare_data(c);
    const auto lattice = build_lattice(c.lattice, c.n_qubits, c.grid_rows);
    ScalingResult res;
    for (std::size_t k = 0; k < c.scales.size(); ++k)
        res.records.push_back(
            evaluate(reduce_and_scale(data, c.n_qubits, c.scales[k]), lattice, c, c.scales[k],
                     sub_seed(c, SeedTag::Svm, c.n_qubits)));
    res.a0 = estimate_transition(res.records);
    return res;
}

/// Per sigma: noise on the scaled features (train and test, independent
/// streams per realization), every column averaged over realizations.
inline std::vector<SweepRecord> run_noise_sweep(const ExperimentConfig &c) {
    validate_config(c, SweepKind::Noise);
    const auto data = prepare_data(c);
    const auto lattice = build_lattice(c.lattice, c.n_qubits, c.grid_rows);
    const auto scaled = reduce_and_scale(data, c.n_qubits, c.a);
    std::vector<SweepRecord> out;
    for (std::size_t k = 0; k < c.sigmas.size(); ++k) {
        const double sigma = c.sigmas[k];
        SweepRecord mean;
        mean.sweep_value = sigma;
        std::size_t auc_count = 0;
        double auc_sum = 0.0;
        for (std::size_t r = 0; r < c.realizations; ++r) {
            PreparedData noisy{add_noise(scaled.train, sigma, sub_seed(c, SeedTag::Noise, k, 2 * r)),
                               add_noise(scaled.test, sigma, sub_seed(c, SeedTag::Noise, k, 2 * r + 1))};
            const auto rec = evaluate(noisy, lattice, c, sigma, sub_seed(c, SeedTag::Svm, c.n_qubits));
            for (std::size_t i = 0; i < 6; ++i) mean.cells[i] += rec.cells[i];
            mean.tvd += rec.tvd;
            mean.mean_corr += rec.mean_corr;
            mean.p_residual += rec.p_residual;
            mean.degeneracy_rate += rec.degeneracy_rate;
            mean.abstain_rate += rec.abstain_rate;
            mean.wall_ms += rec.wall_ms;
            if (rec.auc) {
                auc_sum += *rec.auc;
                ++auc_count;
            }
            for (const auto &[name, count] : rec.patterns) mean.patterns[name] += count;
        }
        const double n = static_cast<double>(c.realizations);
        for (auto &v : mean.cells) v /= n;
        mean.tvd /= n;
        mean.mean_corr /= n;
        mean.p_residual /= n;
        mean.degeneracy_rate /= n;
        mean.abstain_rate /= n;
        mean.wall_ms /= n;
        if (auc_count) mean.auc = auc_sum / static_cast<double>(auc_count);
        out.push_back(std::move(mean));
    }
    return out;
}

struct MeasurementRow {
    std::size_t sample_index = 0;
    int label = 0;
    double exact_corr = 0.0;
    int exact_parity = 0;
    double est_corr = 0.0;
    double est_parity = 0.0;
    double deviation = 0.0;
};

struct MeasurementResult {
    std::vector<MeasurementRow> rows;
    double max_deviation = 0.0;
    // H^n|0> smoke test: largest |<Z_i Z_i+1>| estimate and its 3/sqrt(shots) bound
    double superposition_max_abs = 0.0;
    double superposition_bound = 0.0;
};

inline constexpr const char *kMeasureCsvHeader =
    "sample_index,label,exact_corr,exact_parity,est_corr,est_parity,deviation";

inline MeasurementResult run_measurement_check(const ExperimentConfig &c) {
    validate_config(c, SweepKind::Measure);
    const auto data = prepare_data(c);
    const auto lattice = build_lattice(c.lattice, c.n_qubits, c.grid_rows);
    const auto scaled = reduce_and_scale(data, c.n_qubits, c.a);
    const std::size_t count = std::min(c.measure_samples, scaled.train.size());
    DataSet sample;
    sample.feature_names = scaled.train.feature_names;
    sample.samples.assign(scaled.train.samples.begin(),
                          scaled.train.samples.begin() + static_cast<std::ptrdiff_t>(count));
    const auto encoded = encode_and_classify(sample, lattice, c);

    MeasurementResult res;
    res.rows.resize(count);
    parallel_for(
        count,
        [&](std::size_t i) {
            const auto &s = encoded[i].ground.spin_string;
            auto &row = res.rows[i];
            row.sample_index = i;
            row.label = sample.samples[i].label;
            row.exact_corr = chain_correlation(s);
            row.exact_parity = parity(s);
            const auto est = measure_ground_state_order(encoded[i].ground, c.shots, sub_seed(c, SeedTag::Measure, i));
            row.est_corr = est.correlation;
            row.est_parity = est.parity;
            row.deviation = std::max(std::abs(est.correlation - row.exact_corr),
                                     std::abs(est.parity - static_cast<double>(row.exact_parity)));
        },
        c.threads);
    for (const auto &r : res.rows) res.max_deviation = std::max(res.max_deviation, r.deviation);

    StateVector plus(c.n_qubits);
    plus.apply_hadamard_all();
    for (std::size_t i = 0; i + 1 < c.n_qubits; ++i) {
        const std::array<std::size_t, 2> pair{i, i + 1};
        const double est = hadamard_test(plus, pair, c.shots, sub_seed(c, SeedTag::Measure, count + i, 1));
        res.superposition_max_abs = std::max(res.superposition_max_abs, std::abs(est));
    }
    res.superposition_bound = 3.0 / std::sqrt(static_cast<double>(c.shots));
    return res;
}

// ---- output ---------------------------------------------------------------

inline std::string sweep_csv(const std::vector<SweepRecord> &records) {
    using detail::format_double;
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const auto &r : records) {
        out << format_double(r.sweep_value);
        for (double p : r.cells) out << ',' << format_double(p);
        out << ',' << format_double(r.tvd) << ',' << format_double(r.mean_corr) << ',' << format_double(r.p_residual)
            << ',' << format_double(r.degeneracy_rate) << ',' << format_double(r.abstain_rate) << ','
            << (r.auc ? format_double(*r.auc) : std::string()) << ',' << format_double(r.wall_ms) << '\n';
    }
    return out.str();
}

inline std::string measurement_csv(const MeasurementResult &res) {
    using detail::format_double;
    std::ostringstream out;
    out << kMeasureCsvHeader << '\n';
    for (const auto &r : res.rows)
        out << r.sample_index << ',' << r.label << ',' << format_double(r.exact_corr) << ',' << r.exact_parity << ','
            << format_double(r.est_corr) << ',' << format_double(r.est_parity) << ',' << format_double(r.deviation)
            << '\n';
    return out.str();
}

inline std::string pattern_csv(const std::vector<SweepRecord> &records) {
    std::ostringstream out;
    out << "sweep_value,pattern,count\n";
    for (const auto &r : records)
        for (const auto &[name, count] : r.patterns)
            out << detail::format_double(r.sweep_value) << ',' << name << ',' << count << '\n';
    return out.str();
}

struct PlotSeries {
    std::string name;
    std::vector<double> y;
};

/// Minimal SVG line plot; x shared across series.
inline std::string svg_line_plot(const std::string &title, const std::string &x_label, const std::vector<double> &x,
                                 const std::vector<PlotSeries> &series) {
    constexpr double W = 640, H = 400, L = 60, R = 140, T = 40, B = 50;
    double xmin = x.empty() ? 0 : *std::min_element(x.begin(), x.end());
    double xmax = x.empty() ? 1 : *std::max_element(x.begin(), x.end());
    double ymin = -1.0, ymax = 1.0;
    for (const auto &s : series)
        for (double v : s.y)
            if (std::isfinite(v)) {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
    if (xmax == xmin) xmax = xmin + 1;
    auto px = [&](double v) { return L + (v - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double v) { return H - B - (v - ymin) / (ymax - ymin) * (H - T - B); };
    static const char *colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"};

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title << "</text>\n";
    o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
    for (double v : {ymin, 0.5 * (ymin + ymax), ymax})
        o << "<text x=\"" << L - 6 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
          << detail::format_double(std::round(v * 100) / 100) << "</text>\n";
    for (double v : {xmin, xmax})
        o << "<text x=\"" << px(v) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
          << detail::format_double(v) << "</text>\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char *col = colors[s % 5];
        o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < x.size() && i < series[s].y.size(); ++i)
            if (std::isfinite(series[s].y[i])) o << px(x[i]) << ',' << py(series[s].y[i]) << ' ';
        o << "\"/>\n";
        o << "<text x=\"" << W - R + 10 << "\" y=\"" << T + 18 * (s + 1) << "\" fill=\"" << col << "\">"
          << series[s].name << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

inline std::string sweep_svg(const std::string &title, const std::string &x_label,
                             const std::vector<SweepRecord> &records) {
    std::vector<double> x, corr, tvd, pr, auc;
    bool has_auc = false;
    for (const auto &r : records) {
        x.push_back(r.sweep_value);
        corr.push_back(r.mean_corr);
        tvd.push_back(r.tvd);
        pr.push_back(r.p_residual);
        auc.push_back(r.auc.value_or(std::nan("")));
        has_auc = has_auc || r.auc.has_value();
    }
    std::vector<PlotSeries> series{{"mean C", corr}, {"TVD", tvd}, {"P(R)", pr}};
    if (has_auc) series.push_back({"AUC", auc});
    return svg_line_plot(title, x_label, x, series);
}

}  // namespace isingorder

#endif  // ISINGORDER_EXPERIMENT_HPP
