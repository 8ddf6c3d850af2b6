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

#include "srqe/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "srqe/constants.hpp"
#include "srqe/errors.hpp"

namespace srqe::cli {

namespace {

struct KeySpec {
    const char* section;
    const char* key;
    const char* default_value;  // nullptr = required
};

// The schema: one flat typed key-value table, sections per module.
// experiment.kind is the only required key.
const KeySpec kSchema[] = {
    {"experiment", "kind", nullptr},

    {"cavity", "g_tau", "0.17"},
    {"cavity", "kappa_hz", "74e3"},
    {"cavity", "gamma_atom_hz", "25e3"},
    {"cavity", "wavelength_m", "791.3e-9"},
    {"cavity", "transit_time_s", "139e-9"},
    {"cavity", "n_bar", "0.8"},
    {"cavity", "delta_ac_hz", "0.5e6"},
    {"cavity", "drive_sinc_half_argument", "false"},

    {"ensemble", "calibrate_theta", "true"},
    {"ensemble", "theta_rad", "1.5707963267948966"},
    {"ensemble", "target_t_r_k", "8000"},
    {"ensemble", "phase_mode", "coherent"},

    {"cycle", "delta1_hz", "0.5e6"},
    {"cycle", "delta2_hz", "1.0e6"},
    {"cycle", "n_grid", "64"},
    {"cycle", "mode", "quasi_static"},
    {"cycle", "stroke_durations_s", "1e-5,1e-5,1e-5,1e-5"},
    {"cycle", "thermal_only", "false"},
    {"cycle", "dim", "60"},
    {"cycle", "tol", "1e-9"},
    {"cycle", "t_r_list_k", "8000"},

    {"sweep", "n_bar_values", "0.5,0.75,1.0,1.25,1.5,1.75,2.0,2.25,2.5"},
    {"sweep", "calibration_n_bar", "0"},

    {"trajectory", "n_trajectories", "1000"},
    {"trajectory", "t_final_s", "2.5e-5"},
    {"trajectory", "dim", "30"},
    {"trajectory", "sample_count", "200"},
    {"trajectory", "record_emissions", "true"},

    {"g2", "tau_max_s", "6e-6"},
    {"g2", "tau_points", "121"},

    {"output", "dir", "out"},

    {"run", "seed", "20260810"},
    {"run", "threads", "0"},
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

const KeySpec* find_spec(const std::string& section, const std::string& key) {
    for (const auto& spec : kSchema)
        if (section == spec.section && key == spec.key) return &spec;
    return nullptr;
}

}  // namespace

const char* to_string(Experiment e) {
    switch (e) {
        case Experiment::SteadyState: return "steady_state";
        case Experiment::Cycle: return "cycle";
        case Experiment::PvDiagram: return "pv_diagram";
        case Experiment::Scaling: return "scaling";
        case Experiment::Temperatures: return "temperatures";
        case Experiment::EfficiencyCurve: return "efficiency_curve";
        case Experiment::G2: return "g2";
        case Experiment::TrajectoryValidation: return "trajectory_validation";
    }
    return "unknown";
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

RunConfig RunConfig::from_string(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": key outside any [section]");
        if (!find_spec(section, key))
            throw ConfigError("unknown config key: [" + section + "] " + key);
        cfg.values_[section][key] = value;
    }
    cfg.finalize(text);
    return cfg;
}

void RunConfig::finalize(const std::string& raw_text) {
    for (const auto& spec : kSchema) {
        auto& sect = values_[spec.section];
        if (sect.find(spec.key) == sect.end()) {
            if (!spec.default_value)
                throw ConfigError(std::string("missing required config key: [") +
                                  spec.section + "] " + spec.key);
            sect[spec.key] = spec.default_value;
        }
    }

    const std::string kind = get_string("experiment", "kind");
    bool found = false;
    for (const auto e :
         {Experiment::SteadyState, Experiment::Cycle, Experiment::PvDiagram,
          Experiment::Scaling, Experiment::Temperatures, Experiment::EfficiencyCurve,
          Experiment::G2, Experiment::TrajectoryValidation}) {
        if (kind == to_string(e)) {
            experiment_ = e;
            found = true;
        }
    }
    if (!found) throw ConfigError("unknown experiment kind: " + kind);

    // touch every typed accessor so malformed values fail at load time
    cavity_params();
    (void)ensemble_spec();
    cycle_schedule();
    trajectory_config();
    (void)t_r_list();
    (void)n_bar_values();
    (void)seed();
    (void)threads();
    (void)g2_tau_max();
    (void)g2_tau_points();

    hash_ = fnv1a_hex(raw_text);
}

double RunConfig::get_double(const std::string& section, const std::string& key) const {
    const std::string s = get_string(section, key);
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config [" + section + "] " + key + ": not a number: " + s);
    }
}

int RunConfig::get_int(const std::string& section, const std::string& key) const {
    const double v = get_double(section, key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("config [" + section + "] " + key + ": not an integer");
    return i;
}

bool RunConfig::get_bool(const std::string& section, const std::string& key) const {
    const std::string s = get_string(section, key);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError("config [" + section + "] " + key + ": not a boolean: " + s);
}

std::string RunConfig::get_string(const std::string& section, const std::string& key) const {
    const auto sect = values_.find(section);
    if (sect == values_.end())
        throw ConfigError("config: no such section: " + section);
    const auto it = sect->second.find(key);
    if (it == sect->second.end())
        throw ConfigError("config: no such key: [" + section + "] " + key);
    return it->second;
}

std::vector<double> RunConfig::get_list(const std::string& section,
                                        const std::string& key) const {
    const std::string s = get_string(section, key);
    std::vector<double> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("config [" + section + "] " + key +
                              ": not a number list: " + s);
        }
    }
    if (out.empty())
        throw ConfigError("config [" + section + "] " + key + ": empty list");
    return out;
}

reservoir::CavityAtomParams RunConfig::cavity_params() const {
    reservoir::CavityAtomParams p;
    p.tau = get_double("cavity", "transit_time_s");
    if (p.tau <= 0.0) throw ConfigError("config: transit_time_s must be > 0");
    p.g = get_double("cavity", "g_tau") / p.tau;
    p.kappa = two_pi * get_double("cavity", "kappa_hz");
    p.gamma_atom = two_pi * get_double("cavity", "gamma_atom_hz");
    p.omega_a = two_pi * PhysicalConstants::c / get_double("cavity", "wavelength_m");
    p.N_bar = get_double("cavity", "n_bar");
    p.delta_ac = two_pi * get_double("cavity", "delta_ac_hz");
    p.drive_sinc = get_bool("cavity", "drive_sinc_half_argument")
                       ? reservoir::DriveSinc::HalfArgument
                       : reservoir::DriveSinc::AsPrinted;
    p.validate();
    return p;
}

reservoir::AtomEnsembleSpec RunConfig::ensemble_spec() const {
    reservoir::AtomEnsembleSpec spec;
    spec.theta = get_double("ensemble", "theta_rad");
    const std::string mode = get_string("ensemble", "phase_mode");
    if (mode == "coherent")
        spec.phase_mode = reservoir::PhaseMode::Coherent;
    else if (mode == "randomized")
        spec.phase_mode = reservoir::PhaseMode::Randomized;
    else
        throw ConfigError("config: phase_mode must be coherent or randomized");
    return spec;
}

double RunConfig::resolve_theta(const reservoir::CavityAtomParams& p) const {
    if (!calibrate_theta()) return get_double("ensemble", "theta_rad");
    return reservoir::calibrate_theta(p, target_t_r());
}

engine::CycleSchedule RunConfig::cycle_schedule() const {
    const double omega_a =
        two_pi * PhysicalConstants::c / get_double("cavity", "wavelength_m");
    engine::CycleSchedule s = engine::CycleSchedule::from_detunings(
        omega_a, two_pi * get_double("cycle", "delta1_hz"),
        two_pi * get_double("cycle", "delta2_hz"), get_int("cycle", "n_grid"));
    const std::vector<double> durations = get_list("cycle", "stroke_durations_s");
    if (durations.size() != 4)
        throw ConfigError("config: stroke_durations_s needs exactly 4 values");
    std::copy(durations.begin(), durations.end(), s.stroke_durations.begin());
    s.validate();
    return s;
}

engine::CycleOptions RunConfig::cycle_options() const {
    engine::CycleOptions o;
    const std::string mode = get_string("cycle", "mode");
    if (mode == "quasi_static")
        o.mode = engine::CycleMode::QuasiStatic;
    else if (mode == "dynamic")
        o.mode = engine::CycleMode::Dynamic;
    else
        throw ConfigError("config: cycle mode must be quasi_static or dynamic");
    o.thermal_only = thermal_only();
    o.dim = get_int("cycle", "dim");
    o.tol = get_double("cycle", "tol");
    return o;
}

traj::TrajectoryConfig RunConfig::trajectory_config() const {
    traj::TrajectoryConfig t;
    t.params = cavity_params();
    t.spec = ensemble_spec();
    t.t_final = get_double("trajectory", "t_final_s");
    t.dim = get_int("trajectory", "dim");
    t.n_trajectories = get_int("trajectory", "n_trajectories");
    t.seed = seed();
    t.record_emissions = get_bool("trajectory", "record_emissions");
    t.sample_count = get_int("trajectory", "sample_count");
    return t;
}

double RunConfig::calibration_n_bar() const {
    const double v = get_double("sweep", "calibration_n_bar");
    if (v > 0.0) return v;
    const auto values = n_bar_values();
    return *std::max_element(values.begin(), values.end());
}

std::uint64_t RunConfig::seed() const {
    const double v = get_double("run", "seed");
    if (v < 0.0) throw ConfigError("config: seed must be >= 0");
    return static_cast<std::uint64_t>(v);
}

int RunConfig::threads() const {
    const int t = get_int("run", "threads");
    if (t < 0) throw ConfigError("config: threads must be >= 0");
    if (t == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return t;
}

void RunConfig::override_seed(std::uint64_t seed) {
    values_["run"]["seed"] = std::to_string(seed);
}

void RunConfig::override_threads(int threads) {
    values_["run"]["threads"] = std::to_string(threads);
}

void RunConfig::override_output_dir(const std::string& dir) {
    values_["output"]["dir"] = dir;
}

}  // namespace srqe::cli
