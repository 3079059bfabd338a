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

#ifndef ISINGORDER_DATAIO_HPP
#define ISINGORDER_DATAIO_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isingorder/common.hpp"

namespace isingorder {

struct Sample {
    std::vector<double> features;
    int label = 0;  // 0 or 1
};

struct DataSet {
    std::vector<Sample> samples;
    std::vector<std::string> feature_names;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    std::size_t n_features() const { return samples.empty() ? feature_names.size() : samples.front().features.size(); }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(samples.size());
        for (const auto &s : samples) out.push_back(s.label);
        return out;
    }

    std::size_t count_label(int label) const {
        return static_cast<std::size_t>(
            std::count_if(samples.begin(), samples.end(), [label](const Sample &s) { return s.label == label; }));
    }

    /// Throws unless the set is non-empty, rectangular and binary-labelled.
    void validate() const {
        if (samples.empty()) throw Error("dataset is empty");
        const std::size_t width = samples.front().features.size();
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (samples[i].features.size() != width)
                throw Error("dataset is ragged: sample " + std::to_string(i) + " has " +
                            std::to_string(samples[i].features.size()) + " features, expected " +
                            std::to_string(width));
            if (samples[i].label != 0 && samples[i].label != 1)
                throw Error("sample " + std::to_string(i) + " has non-binary label");
        }
    }
};

namespace detail {

// One RFC-4180 record. Quoted fields may contain commas and doubled quotes;
// embedded newlines are not supported.
inline std::vector<std::string> split_csv_record(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline bool parse_finite(std::string_view text, double &out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

}  // namespace detail

/// Reads a headered CSV. Rows whose label cell equals positive_label get
/// label 1, all others 0. Every other column must be a finite real.
inline DataSet load_csv(const std::string &path, const std::string &label_column,
                        const std::string &positive_label) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open CSV file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw Error("CSV file '" + path + "' has no header row");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    auto header = detail::split_csv_record(line);
    for (auto &h : header) h = std::string(detail::trim(h));

    auto it = std::find(header.begin(), header.end(), label_column);
    if (it == header.end()) throw Error("label column '" + label_column + "' not found in '" + path + "'");
    const auto label_idx = static_cast<std::size_t>(it - header.begin());

    DataSet data;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (c != label_idx) data.feature_names.push_back(header[c]);

    std::size_t row = 1;  // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (detail::trim(line).empty()) continue;
        auto cells = detail::split_csv_record(line);
        if (cells.size() != header.size())
            throw Error("ragged row " + std::to_string(row) + ": " + std::to_string(cells.size()) +
                        " cells, header has " + std::to_string(header.size()));
        Sample s;
        s.features.reserve(header.size() - 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == label_idx) {
                s.label = detail::trim(cells[c]) == positive_label ? 1 : 0;
                continue;
            }
            double v = 0.0;
            if (!detail::parse_finite(cells[c], v))
                throw Error("non-numeric cell '" + cells[c] + "' at row " + std::to_string(row) + ", column '" +
                            header[c] + "'");
            s.features.push_back(v);
        }
        data.samples.push_back(std::move(s));
    }
    if (data.samples.empty()) throw Error("CSV file '" + path + "' has no data rows");
    return data;
}

/// Undersamples to target_total rows, exactly half per class, drawn uniformly
/// without replacement. Original row order is preserved among survivors.
inline DataSet balance_downsample(const DataSet &data, std::size_t target_total, std::uint64_t seed) {
    if (target_total == 0 || target_total % 2 != 0)
        throw Error("balance target must be a positive even count, got " + std::to_string(target_total));
    const std::size_t per_class = target_total / 2;

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> keep;
    keep.reserve(target_total);
    for (int label : {0, 1}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < data.samples.size(); ++i)
            if (data.samples[i].label == label) idx.push_back(i);
        if (idx.size() < per_class)
            throw Error("insufficient samples in class " + std::to_string(label) + ": have " +
                        std::to_string(idx.size()) + ", need " + std::to_string(per_class));
        std::shuffle(idx.begin(), idx.end(), rng);
        keep.insert(keep.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(per_class));
    }
    std::sort(keep.begin(), keep.end());

    DataSet out;
    out.feature_names = data.feature_names;
    out.samples.reserve(keep.size());
    for (auto i : keep) out.samples.push_back(data.samples[i]);
    return out;
}

/// Stratified split: each class contributes round(train_fraction * n_class)
/// rows to the training set. Both sides must keep every class non-empty.
inline std::pair<DataSet, DataSet> train_test_split(const DataSet &data, double train_fraction,
                                                    std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw Error("train fraction must lie in (0, 1), got " + std::to_string(train_fraction));

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> train_idx, test_idx;
    for (int label : {0, 1}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < data.samples.size(); ++i)
            if (data.samples[i].label == label) idx.push_back(i);
        if (idx.empty()) continue;
        std::shuffle(idx.begin(), idx.end(), rng);
        auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(idx.size())));
        if (n_train == 0 || n_train == idx.size())
            throw Error("train fraction " + std::to_string(train_fraction) + " leaves an empty partition for class " +
                        std::to_string(label) + " (" + std::to_string(idx.size()) + " samples)");
        train_idx.insert(train_idx.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
        test_idx.insert(test_idx.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
    }
    if (train_idx.empty() || test_idx.empty()) throw Error("split produced an empty partition");
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());

    DataSet train, test;
    train.feature_names = test.feature_names = data.feature_names;
    for (auto i : train_idx) train.samples.push_back(data.samples[i]);
    for (auto i : test_idx) test.samples.push_back(data.samples[i]);
    return {std::move(train), std::move(test)};
}

/// Two unit-variance Gaussian blobs centred at -separation/2 (class 0) and
/// +separation/2 (class 1) on every axis.
inline DataSet synth_generate(std::size_t n_per_class, std::size_t n_features, double class_separation,
                              std::uint64_t seed) {
    if (n_per_class < 1 || n_features < 1) throw Error("synthetic dataset needs at least one sample and feature");
    if (!(class_separation >= 0.0)) throw Error("class separation must be >= 0");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    DataSet out;
    for (std::size_t f = 0; f < n_features; ++f) out.feature_names.push_back("f" + std::to_string(f));
    out.samples.reserve(2 * n_per_class);
    for (std::size_t i = 0; i < n_per_class; ++i) {
        for (int label : {0, 1}) {
            const double centre = (label == 1 ? 0.5 : -0.5) * class_separation;
            Sample s;
            s.label = label;
            s.features.resize(n_features);
            for (auto &v : s.features) v = centre + gauss(rng);
            out.samples.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace isingorder

#endif  // ISINGORDER_DATAIO_HPP
