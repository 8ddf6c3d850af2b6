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

#include "srqe/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "srqe/constants.hpp"
#include "srqe/dynamics.hpp"
#include "srqe/errors.hpp"
#include "srqe/version.hpp"

namespace srqe::cli {

namespace {

using nlohmann::json;

constexpr const char* kStrokeLabels[4] = {"AB", "BC", "CD", "DA"};

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Every CSV starts with a comment line carrying the config hash.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const RunConfig& cfg,
              const std::string& columns)
        : out_(path) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
        out_ << "# srqe " << kVersion << " config_hash=" << cfg.config_hash() << "\n";
        out_ << columns << "\n";
    }

    template <typename... Ts>
    void row(Ts... values) {
        bool first = true;
        (write_cell(values, first), ...);
        out_ << "\n";
    }

  private:
    void write_cell(double v, bool& first) {
        if (!first) out_ << ",";
        out_ << fmt12(v);
        first = false;
    }
    void write_cell(const std::string& v, bool& first) {
        if (!first) out_ << ",";
        out_ << v;
        first = false;
    }
    void write_cell(const char* v, bool& first) {
        write_cell(std::string(v), first);
    }
    std::ofstream out_;
};

json ledger_to_json(const engine::CycleLedger& L) {
    json strokes = json::object();
    for (int s = 0; s < 4; ++s) {
        strokes[kStrokeLabels[s]] = {{"W_J", L.strokes[s].W},
                                     {"Q_J", L.strokes[s].Q},
                                     {"dS_kB", L.strokes[s].dS},
                                     {"dErgotropy_J", L.strokes[s].dErgotropy}};
    }
    return json{{"strokes", strokes},
                {"n_th", L.n_th},
                {"n_sr", L.n_sr},
                {"n_th_prime", L.n_th_prime},
                {"n_sr_prime", L.n_sr_prime},
                {"W_out_J", L.W_out},
                {"Q_in_J", L.Q_in},
                {"Q_out_J", L.Q_out},
                {"eta", L.eta},
                {"T_c_sr_K", L.T_c_sr},
                {"T_c_th_K", L.T_c_th},
                {"T_R_K", L.T_R},
                {"theta_rad", L.theta},
                {"negative_work", L.negative_work},
                {"first_law_residual", L.first_law_residual},
                {"entropy_closure_residual", L.entropy_closure_residual},
                {"heat_symmetry_residual", L.heat_symmetry_residual},
                {"t_r_drift_rel", L.t_r_drift_rel},
                {"coherence_per_atom_kB", L.coherence_per_atom},
                {"t_r_delta_c_per_atom_J", L.t_r_delta_c_per_atom},
                {"cycle_energy_residual", L.cycle_energy_residual}};
}

json derived_to_json(const reservoir::ReservoirDerived& d) {
    return json{{"rho_ee", d.rho_ee},
                {"rho_gg", d.rho_gg},
                {"rho_eg_re", d.rho_eg.real()},
                {"rho_eg_im", d.rho_eg.imag()},
                {"gamma_inj_per_s", d.gamma_inj},
                {"n_th", d.n_th},
                {"Gamma_r_rad_s", d.Gamma_r},
                {"lambda_re_rad_s", d.lambda_drive.real()},
                {"lambda_im_rad_s", d.lambda_drive.imag()},
                {"T_R_K", d.T_R}};
}

struct ExperimentContext {
    const RunConfig& cfg;
    std::filesystem::path outdir;
    json results = json::object();
};

void run_steady_state(ExperimentContext& ctx) {
    const auto p = ctx.cfg.cavity_params();
    auto spec = ctx.cfg.ensemble_spec();
    spec.theta = ctx.cfg.resolve_theta(p);

    const auto d = reservoir::derive(p, spec);
    const auto an = dynamics::steady_state_analytic(p, spec);

    const int dim = ctx.cfg.get_int("cycle", "dim");
    const auto gen = dynamics::build_generator(p, spec, dim);
    const auto numeric = dynamics::steady_state_numeric(gen);
    const auto ideal = fock::displaced_thermal_state(an.alpha, an.n_th, dim);
    const auto stats = fock::photon_statistics(numeric);

    ctx.results = {
        {"derived", derived_to_json(d)},
        {"theta_rad", spec.theta},
        {"alpha_re", an.alpha.real()},
        {"alpha_im", an.alpha.imag()},
        {"n_total_analytic", an.n_total},
        {"n_total_numeric", stats.n_mean},
        {"g2_zero_numeric", stats.g2_zero},
        {"g2_zero_closed_form",
         fock::displaced_thermal_g2(an.n_th, std::norm(an.alpha))},
        {"trace_distance_numeric_vs_analytic",
         linalg::trace_distance(numeric.matrix(), ideal.matrix())},
        {"atoms_per_decay_time", reservoir::atoms_per_decay_time(p)},
        {"warnings", p.warnings()},
    };
}

void run_cycle_experiment(ExperimentContext& ctx) {
    const auto p = ctx.cfg.cavity_params();
    const double theta = ctx.cfg.resolve_theta(p);
    const auto L = engine::run_cycle(p, ctx.cfg.cycle_schedule(), theta,
                                     ctx.cfg.cycle_options());
    ctx.results = {{"ledger", ledger_to_json(L)}};
}

void run_pv_diagram(ExperimentContext& ctx) {
    json per_tr = json::object();
    for (const double t_r : ctx.cfg.t_r_list()) {
        auto p = ctx.cfg.cavity_params();
        const auto schedule = ctx.cfg.cycle_schedule();
        p.delta_ac = schedule.delta_1;
        const double theta = reservoir::calibrate_theta(p, t_r);
        const auto L = engine::run_cycle(p, schedule, theta, ctx.cfg.cycle_options());

        char name[64];
        std::snprintf(name, sizeof name, "pv_diagram_TR%.0f.csv", t_r);
        CsvWriter csv(ctx.outdir / name, ctx.cfg,
                      "detuning_Hz,photon_number,stroke_label");
        for (const auto& pt : L.pv_points)
            csv.row(pt.delta_ac / two_pi, pt.n, kStrokeLabels[pt.stroke]);

        per_tr[fmt12(t_r)] = ledger_to_json(L);
    }
    ctx.results = {{"ledgers_by_T_R", per_tr}};
}

void run_scaling(ExperimentContext& ctx) {
    json per_tr = json::object();
    const auto n_bars = ctx.cfg.n_bar_values();
    for (const double t_r : ctx.cfg.t_r_list()) {
        auto p = ctx.cfg.cavity_params();
        const auto schedule = ctx.cfg.cycle_schedule();
        p.delta_ac = schedule.delta_1;
        p.N_bar = ctx.cfg.calibration_n_bar();
        const double theta = reservoir::calibrate_theta(p, t_r);
        const auto result = engine::scaling_sweep(p, schedule, theta, n_bars);

        char name[64];
        std::snprintf(name, sizeof name, "scaling_TR%.0f.csv", t_r);
        CsvWriter csv(ctx.outdir / name, ctx.cfg, "N_bar,W_out_J");
        for (const auto& pt : result.points) csv.row(pt.N_bar, pt.W_out);

        per_tr[fmt12(t_r)] = {{"slope", result.slope},
                              {"theta_rad", theta},
                              {"calibration_n_bar", ctx.cfg.calibration_n_bar()}};
    }
    ctx.results = {{"fits_by_T_R", per_tr}};
}

// Per-point theta calibration holds T_R fixed across the sweep, as in the
// temperature and efficiency figures.
void run_temperatures(ExperimentContext& ctx) {
    const double t_r = ctx.cfg.target_t_r();
    CsvWriter csv(ctx.outdir / "temperatures.csv", ctx.cfg,
                  "N_bar,T_c_sr_K,T_c_th_K,T_R_K");
    json points = json::array();
    for (const double n_bar : ctx.cfg.n_bar_values()) {
        auto p = ctx.cfg.cavity_params();
        const auto schedule = ctx.cfg.cycle_schedule();
        p.delta_ac = schedule.delta_1;
        p.N_bar = n_bar;
        const double theta = reservoir::calibrate_theta(p, t_r);
        const auto L = engine::run_cycle(p, schedule, theta, ctx.cfg.cycle_options());
        csv.row(n_bar, L.T_c_sr, L.T_c_th, L.T_R);
        points.push_back({{"N_bar", n_bar},
                          {"T_c_sr_K", L.T_c_sr},
                          {"T_c_th_K", L.T_c_th},
                          {"T_R_K", L.T_R},
                          {"ratio", L.T_c_sr / L.T_c_th}});
    }
    ctx.results = {{"target_T_R_K", t_r}, {"points", points}};
}

void run_efficiency_curve(ExperimentContext& ctx) {
    const double t_r = ctx.cfg.target_t_r();
    CsvWriter csv(ctx.outdir / "efficiency.csv", ctx.cfg, "N_bar,eta");
    json points = json::array();
    for (const double n_bar : ctx.cfg.n_bar_values()) {
        auto p = ctx.cfg.cavity_params();
        const auto schedule = ctx.cfg.cycle_schedule();
        p.delta_ac = schedule.delta_1;
        p.N_bar = n_bar;
        const double theta = reservoir::calibrate_theta(p, t_r);
        const auto L = engine::run_cycle(p, schedule, theta, ctx.cfg.cycle_options());
        csv.row(n_bar, L.eta);
        points.push_back({{"N_bar", n_bar}, {"eta", L.eta}});
    }
    ctx.results = {{"target_T_R_K", t_r}, {"points", points}};
}

void run_g2(ExperimentContext& ctx) {
    const auto p = ctx.cfg.cavity_params();
    auto spec = ctx.cfg.ensemble_spec();
    spec.theta = ctx.cfg.resolve_theta(p);

    const int dim = ctx.cfg.get_int("cycle", "dim");
    const auto gen = dynamics::build_generator(p, spec, dim);
    const auto ss = dynamics::steady_state_numeric(gen);

    const int npts = ctx.cfg.g2_tau_points();
    std::vector<double> taus(npts);
    for (int i = 0; i < npts; ++i)
        taus[i] = ctx.cfg.g2_tau_max() * static_cast<double>(i) / (npts - 1);
    const auto g2 = dynamics::g2_correlation(gen, ss, taus);

    CsvWriter csv(ctx.outdir / "g2.csv", ctx.cfg, "tau_s,g2");
    for (int i = 0; i < npts; ++i) csv.row(taus[i], g2[i]);

    const auto stats = fock::photon_statistics(ss);
    const auto an = dynamics::steady_state_analytic(p, spec);
    ctx.results = {{"theta_rad", spec.theta},
                   {"n_mean", stats.n_mean},
                   {"g2_zero", g2.front()},
                   {"g2_zero_closed_form",
                    fock::displaced_thermal_g2(an.n_th, std::norm(an.alpha))},
                   {"g2_final", g2.back()}};
}

void run_trajectory_validation(ExperimentContext& ctx) {
    auto base = ctx.cfg.trajectory_config();
    const int threads = ctx.cfg.threads();

    CsvWriter csv(ctx.outdir / "trajectory_validation.csv", ctx.cfg,
                  "t_s,mode,n_mean,n_stderr,n_master");
    json summary = json::object();

    std::ofstream events;
    if (base.record_emissions) {
        events.open(ctx.outdir / "events.csv");
        events << "# srqe " << kVersion << " config_hash=" << ctx.cfg.config_hash()
               << "\n";
        events << "trajectory_index,event_type,time_s\n";
    }

    for (const auto mode :
         {reservoir::PhaseMode::Coherent, reservoir::PhaseMode::Randomized}) {
        traj::TrajectoryConfig cfg = base;
        cfg.spec.phase_mode = mode;
        const char* label =
            mode == reservoir::PhaseMode::Coherent ? "coherent" : "randomized";

        const auto an = dynamics::steady_state_analytic(cfg.params, cfg.spec);
        const auto records = traj::run_ensemble(cfg, threads);
        const auto stats = traj::ensemble_statistics(records);
        const auto [mean, se] =
            traj::window_average(records, 0.75 * cfg.t_final, cfg.t_final);

        for (std::size_t i = 0; i < stats.times.size(); ++i)
            csv.row(stats.times[i], label, stats.mean[i], stats.standard_error[i],
                    an.n_total);

        if (events.is_open()) {
            for (std::size_t r = 0; r < records.size(); ++r) {
                for (const double t : records[r].atom_arrival_times)
                    events << r << ",atom," << fmt12(t) << "\n";
                for (const double t : records[r].jump_times)
                    events << r << ",jump," << fmt12(t) << "\n";
            }
        }

        const auto warning = traj::validity_warning(cfg, records);
        summary[label] = {
            {"n_analytic", an.n_total},
            {"n_trajectory_mean", mean},
            {"n_trajectory_stderr", se},
            {"z_score", (mean - an.n_total) / se},
            {"warning", warning.value_or("")},
        };
    }
    ctx.results = {{"modes", summary}};
}

}  // namespace

std::string run_experiment(const RunConfig& config) {
    ExperimentContext ctx{config, config.output_dir()};
    std::filesystem::create_directories(ctx.outdir);

    switch (config.experiment()) {
        case Experiment::SteadyState: run_steady_state(ctx); break;
        case Experiment::Cycle: run_cycle_experiment(ctx); break;
        case Experiment::PvDiagram: run_pv_diagram(ctx); break;
        case Experiment::Scaling: run_scaling(ctx); break;
        case Experiment::Temperatures: run_temperatures(ctx); break;
        case Experiment::EfficiencyCurve: run_efficiency_curve(ctx); break;
        case Experiment::G2: run_g2(ctx); break;
        case Experiment::TrajectoryValidation: run_trajectory_validation(ctx); break;
    }

    json echo = json::object();
    for (const auto& [section, keys] : config.resolved()) {
        json sect = json::object();
        for (const auto& [key, value] : keys) sect[key] = value;
        echo[section] = sect;
    }

    const json summary = {
        {"version", kVersion},
        {"experiment", to_string(config.experiment())},
        {"seed", config.seed()},
        {"threads", config.threads()},
        {"config_hash", config.config_hash()},
        {"config", echo},
        {"results", ctx.results},
    };

    const auto path = ctx.outdir / "summary.json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << summary.dump(2) << "\n";
    return path.string();
}

}  // namespace srqe::cli
