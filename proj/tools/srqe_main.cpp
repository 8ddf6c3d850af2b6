// Copyright 2026 The srqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "srqe/checks.hpp"
#include "srqe/config.hpp"
#include "srqe/errors.hpp"
#include "srqe/experiments.hpp"
#include "srqe/version.hpp"

namespace {

// Exit codes: 0 ok, 2 config, 3 solver/numeric, 4 masing threshold, 5 i/o.
enum ExitCode {
    kOk = 0,
    kConfigError = 2,
    kNumericError = 3,
    kMasingError = 4,
    kIoError = 5,
};

void write_error_record(const std::string& outdir, int code,
                        const std::string& type, const std::string& message) {
    try {
        std::filesystem::create_directories(outdir);
        std::ofstream out(std::filesystem::path(outdir) / "error.json");
        out << nlohmann::json{{"error_code", code},
                              {"error_type", type},
                              {"message", message}}
                   .dump(2)
            << "\n";
    } catch (...) {
        // the error is already going to stderr
    }
}

int run_subcommand(const std::string& config_path, const std::string& outdir,
                   long long seed, int threads) {
    std::string effective_outdir = outdir;
    try {
        srqe::cli::RunConfig config = srqe::cli::RunConfig::from_file(config_path);
        if (!outdir.empty()) config.override_output_dir(outdir);
        if (seed >= 0) config.override_seed(static_cast<std::uint64_t>(seed));
        if (threads > 0) config.override_threads(threads);
        effective_outdir = config.output_dir();

        for (const auto& w : config.cavity_params().warnings())
            std::cerr << "warning: " << w << "\n";

        const std::string summary = srqe::cli::run_experiment(config);
        std::cout << summary << "\n";
        return kOk;
    } catch (const srqe::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        write_error_record(effective_outdir.empty() ? "." : effective_outdir,
                           kConfigError, "config", e.what());
        return kConfigError;
    } catch (const srqe::GainExceedsLossError& e) {
        std::cerr << "masing threshold: " << e.what() << "\n";
        write_error_record(effective_outdir.empty() ? "." : effective_outdir,
                           kMasingError, "masing_threshold", e.what());
        return kMasingError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        write_error_record(effective_outdir.empty() ? "." : effective_outdir,
                           kNumericError, "numeric", e.what());
        return kNumericError;
    }
}

int selfcheck_subcommand(int threads, bool skip_slow) {
    const auto results = skip_slow ? srqe::checks::run_invariant_suite()
                                   : srqe::checks::run_selfcheck(threads);
    for (const auto& r : results)
        std::printf("[%s] %s — %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
    const bool ok = srqe::checks::all_passed(results);
    std::printf("%zu checks, %s\n", results.size(), ok ? "all passed" : "FAILURES");
    return ok ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superradiant photonic engine simulator"};
    app.require_subcommand(1);

    std::string config_path, outdir;
    long long seed = -1;
    int threads = 0;
    auto* run = app.add_subcommand("run", "run a configured experiment");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--out", outdir, "output directory (overrides config)");
    run->add_option("--seed", seed, "RNG seed (overrides config)");
    run->add_option("--threads", threads, "worker threads (overrides config)");

    bool skip_slow = false;
    int check_threads = 0;
    auto* selfcheck =
        app.add_subcommand("selfcheck", "run the invariant and acceptance suite");
    selfcheck->add_flag("--skip-slow", skip_slow, "invariants only");
    selfcheck->add_option("--threads", check_threads, "worker threads");

    auto* version = app.add_subcommand("version", "print version");

    CLI11_PARSE(app, argc, argv);

    if (version->parsed()) {
        std::printf("srqe %s\n", srqe::kVersion);
        return kOk;
    }
    if (selfcheck->parsed()) {
        const int t = check_threads > 0
                          ? check_threads
                          : static_cast<int>(std::thread::hardware_concurrency());
        return selfcheck_subcommand(t > 0 ? t : 1, skip_slow);
    }
    return run_subcommand(config_path, outdir, seed, threads);
}
