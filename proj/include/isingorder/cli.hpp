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

#ifndef ISINGORDER_CLI_HPP
#define ISINGORDER_CLI_HPP

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "isingorder/experiment.hpp"

namespace isingorder {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

namespace detail {

inline void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

inline void write_manifest(const std::filesystem::path &dir, const std::string &command, const ExperimentConfig &cfg,
                           const nlohmann::json &summary, const std::vector<std::string> &outputs) {
    const auto kv = to_key_values(cfg);
    nlohmann::json j;
    j["tool"] = "isingorder";
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = kv;
    j["seeds"] = {{"master", cfg.seed},
                  {"synth", sub_seed(cfg, SeedTag::Synth)},
                  {"balance", sub_seed(cfg, SeedTag::Balance)},
                  {"split", sub_seed(cfg, SeedTag::Split)}};
    j["outputs"] = outputs;
    j["summary"] = summary;
    write_text(dir / (command + ".manifest.json"), j.dump(2) + "\n");

    // Same config as a flat file, usable directly with --config.
    std::string flat = "# resolved config for `" + command + "`, isingorder " + kVersion + "\n";
    for (const auto &[k, v] : kv) flat += k + "=" + v + "\n";
    write_text(dir / (command + ".manifest.cfg"), flat);
}

}  // namespace detail

/// Runs one subcommand with a resolved config, writing CSV/SVG/manifest into
/// cfg.output_dir. Returns a one-line human summary.
inline std::string run_command(const std::string &command, ExperimentConfig cfg) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.output_dir);
    nlohmann::json summary;
    std::vector<std::string> outputs;
    std::string message;

    auto validate_first = [&](SweepKind kind) {
        validate_config(cfg, kind);
        fs::create_directories(dir);
    };

    if (command == "features" || command == "qsvc") {
        if (command == "qsvc") cfg.qsvc = true;
        validate_first(SweepKind::Features);
        const auto records = run_feature_sweep(cfg);
        detail::write_text(dir / (command + ".csv"), sweep_csv(records));
        outputs.push_back(command + ".csv");
        if (cfg.lattice == LatticeKind::TriangleGrid) {
            detail::write_text(dir / (command + "_patterns.csv"), pattern_csv(records));
            outputs.push_back(command + "_patterns.csv");
        }
        if (cfg.svg) {
            detail::write_text(dir / (command + ".svg"),
                               sweep_svg("feature sweep (" + to_string(cfg.lattice) + ")", "features", records));
            outputs.push_back(command + ".svg");
        }
        summary["rows"] = records.size();
        message = command + ": " + std::to_string(records.size()) + " rows";
    } else if (command == "scaling") {
        validate_first(SweepKind::Scaling);
        const auto res = run_scaling_sweep(cfg);
        detail::write_text(dir / "scaling.csv", sweep_csv(res.records));
        outputs.push_back("scaling.csv");
        if (cfg.svg) {
            detail::write_text(dir / "scaling.svg", sweep_svg("scaling sweep", "a", res.records));
            outputs.push_back("scaling.svg");
        }
        summary["rows"] = res.records.size();
        summary["a0"] = res.a0 ? nlohmann::json(*res.a0) : nlohmann::json(nullptr);
        summary["a0_threshold"] = kTransitionThreshold;
        message = "scaling: " + std::to_string(res.records.size()) + " rows, a0 = " +
                  (res.a0 ? detail::format_double(*res.a0) : std::string("none"));
    } else if (command == "noise") {
        validate_first(SweepKind::Noise);
        const auto records = run_noise_sweep(cfg);
        detail::write_text(dir / "noise.csv", sweep_csv(records));
        outputs.push_back("noise.csv");
        if (cfg.svg) {
            detail::write_text(dir / "noise.svg", sweep_svg("noise sweep", "sigma", records));
            outputs.push_back("noise.svg");
        }
        summary["rows"] = records.size();
        message = "noise: " + std::to_string(records.size()) + " rows";
    } else if (command == "measure") {
        validate_first(SweepKind::Measure);
        const auto res = run_measurement_check(cfg);
        detail::write_text(dir / "measure.csv", measurement_csv(res));
        outputs.push_back("measure.csv");
        summary["rows"] = res.rows.size();
        summary["max_deviation"] = res.max_deviation;
        summary["superposition_max_abs"] = res.superposition_max_abs;
        summary["superposition_bound"] = res.superposition_bound;
        message = "measure: " + std::to_string(res.rows.size()) + " samples, max deviation " +
                  detail::format_double(res.max_deviation);
    } else {
        throw ConfigError("unknown command '" + command + "'");
    }
    detail::write_manifest(dir, command, cfg, summary, outputs);
    return message;
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    CLI::App app{"Ising spin-order analysis of classical datasets"};
    app.set_version_flag("--version", std::string(kVersion));
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_dir;
    std::string seed;
    app.add_option("--config", config_path, "flat key=value config file")->required();
    app.add_option("--set", overrides, "override a config key, e.g. --set lattice=square_ladder")
        ->take_all()
        ->allow_extra_args(false);
    app.add_option("-o,--output-dir", output_dir, "override output_dir");
    app.add_option("--seed", seed, "override seed");
    app.require_subcommand(1);
    for (const char *name : {"features", "scaling", "noise", "measure", "qsvc"}) app.add_subcommand(name)->fallthrough();
    app.get_subcommand("features")->description("TVD / order statistics versus PCA feature count");
    app.get_subcommand("scaling")->description("mean chain correlation versus scaling factor a, with a0");
    app.get_subcommand("noise")->description("mean chain correlation versus Gaussian noise sigma");
    app.get_subcommand("measure")->description("Hadamard-test estimates versus exact ground-state order");
    app.get_subcommand("qsvc")->description("feature sweep with the quantum-kernel SVM AUC column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        ExperimentConfig cfg;
        apply_key_values(cfg, load_key_values(config_path));
        std::map<std::string, std::string> kv;
        for (const auto &o : overrides) {
            auto eq = o.find('=');
            if (eq == std::string::npos || eq == 0) throw ConfigError("--set expects key=value, got '" + o + "'");
            kv[o.substr(0, eq)] = o.substr(eq + 1);
        }
        if (!output_dir.empty()) kv["output_dir"] = output_dir;
        if (!seed.empty()) kv["seed"] = seed;
        apply_key_values(cfg, kv);

        const std::string command = app.get_subcommands().front()->get_name();
        out << run_command(command, cfg) << "\n";
        return kExitOk;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace isingorder

#endif  // ISINGORDER_CLI_HPP
