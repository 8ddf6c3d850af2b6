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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "srqe/engine.hpp"
#include "srqe/reservoir.hpp"
#include "srqe/trajectory.hpp"

namespace srqe::cli {

enum class Experiment {
    SteadyState,
    Cycle,
    PvDiagram,
    Scaling,
    Temperatures,
    EfficiencyCurve,
    G2,
    TrajectoryValidation,
};

const char* to_string(Experiment e);

// Flat sectioned key-value config. Every key has a default except
// experiment.kind; unknown sections or keys are rejected. The resolved
// values (defaults included) are echoed into every output.
class RunConfig {
  public:
    static RunConfig from_file(const std::string& path);
    static RunConfig from_string(const std::string& text);

    Experiment experiment() const { return experiment_; }

    // resolved physical inputs
    reservoir::CavityAtomParams cavity_params() const;
    reservoir::AtomEnsembleSpec ensemble_spec() const;
    // theta, calibrated against target_t_r_k when requested
    double resolve_theta(const reservoir::CavityAtomParams& p) const;
    engine::CycleSchedule cycle_schedule() const;
    engine::CycleOptions cycle_options() const;
    traj::TrajectoryConfig trajectory_config() const;

    bool calibrate_theta() const { return get_bool("ensemble", "calibrate_theta"); }
    double target_t_r() const { return get_double("ensemble", "target_t_r_k"); }
    std::vector<double> t_r_list() const { return get_list("cycle", "t_r_list_k"); }
    std::vector<double> n_bar_values() const { return get_list("sweep", "n_bar_values"); }
    double calibration_n_bar() const;
    bool thermal_only() const { return get_bool("cycle", "thermal_only"); }
    double g2_tau_max() const { return get_double("g2", "tau_max_s"); }
    int g2_tau_points() const { return get_int("g2", "tau_points"); }
    std::uint64_t seed() const;
    int threads() const;
    std::string output_dir() const { return get_string("output", "dir"); }

    void override_seed(std::uint64_t seed);
    void override_threads(int threads);
    void override_output_dir(const std::string& dir);

    // fnv-1a over the raw config text
    std::string config_hash() const { return hash_; }
    // section -> key -> resolved value string, defaults included
    const std::map<std::string, std::map<std::string, std::string>>& resolved() const {
        return values_;
    }

    double get_double(const std::string& section, const std::string& key) const;
    int get_int(const std::string& section, const std::string& key) const;
    bool get_bool(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key) const;
    std::vector<double> get_list(const std::string& section, const std::string& key) const;

  private:
    RunConfig() = default;
    void finalize(const std::string& raw_text);

    Experiment experiment_ = Experiment::SteadyState;
    std::map<std::string, std::map<std::string, std::string>> values_;
    std::string hash_;
};

std::string fnv1a_hex(const std::string& data);

}  // namespace srqe::cli
