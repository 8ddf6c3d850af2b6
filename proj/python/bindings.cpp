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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srqe/checks.hpp"
#include "srqe/errors.hpp"
#include "srqe/constants.hpp"
#include "srqe/dynamics.hpp"
#include "srqe/engine.hpp"
#include "srqe/fock.hpp"
#include "srqe/reservoir.hpp"
#include "srqe/trajectory.hpp"
#include "srqe/version.hpp"

namespace py = pybind11;
using namespace srqe;

namespace {

reservoir::CavityAtomParams make_params(double g_tau, double kappa_hz,
                                        double wavelength_m, double transit_time_s,
                                        double n_bar, double delta_ac_hz,
                                        double gamma_atom_hz,
                                        bool drive_sinc_half_argument) {
    reservoir::CavityAtomParams p;
    p.tau = transit_time_s;
    p.g = g_tau / transit_time_s;
    p.kappa = two_pi * kappa_hz;
    p.gamma_atom = two_pi * gamma_atom_hz;
    p.omega_a = two_pi * PhysicalConstants::c / wavelength_m;
    p.N_bar = n_bar;
    p.delta_ac = two_pi * delta_ac_hz;
    p.drive_sinc = drive_sinc_half_argument ? reservoir::DriveSinc::HalfArgument
                                            : reservoir::DriveSinc::AsPrinted;
    p.validate();
    return p;
}

py::dict ledger_dict(const engine::CycleLedger& L) {
    static const char* labels[4] = {"AB", "BC", "CD", "DA"};
    py::dict strokes;
    for (int s = 0; s < 4; ++s) {
        py::dict d;
        d["W_J"] = L.strokes[s].W;
        d["Q_J"] = L.strokes[s].Q;
        d["dS_kB"] = L.strokes[s].dS;
        d["dErgotropy_J"] = L.strokes[s].dErgotropy;
        strokes[labels[s]] = d;
    }
    py::dict out;
    out["strokes"] = strokes;
    out["n_th"] = L.n_th;
    out["n_sr"] = L.n_sr;
    out["n_th_prime"] = L.n_th_prime;
    out["n_sr_prime"] = L.n_sr_prime;
    out["W_out_J"] = L.W_out;
    out["Q_in_J"] = L.Q_in;
    out["Q_out_J"] = L.Q_out;
    out["eta"] = L.eta;
    out["T_c_sr_K"] = L.T_c_sr;
    out["T_c_th_K"] = L.T_c_th;
    out["T_R_K"] = L.T_R;
    out["theta_rad"] = L.theta;
    out["first_law_residual"] = L.first_law_residual;
    out["entropy_closure_residual"] = L.entropy_closure_residual;
    out["heat_symmetry_residual"] = L.heat_symmetry_residual;
    out["t_r_drift_rel"] = L.t_r_drift_rel;
    return out;
}

}  // namespace

PYBIND11_MODULE(_srqe, m) {
    m.doc() = "superradiant photonic engine simulator (C++ core)";
    m.attr("__version__") = kVersion;
    m.attr("h") = PhysicalConstants::h;
    m.attr("hbar") = PhysicalConstants::hbar;
    m.attr("k_B") = PhysicalConstants::k_B;
    m.attr("c") = PhysicalConstants::c;

    py::register_exception<GainExceedsLossError>(m, "GainExceedsLossError");
    py::register_exception<TruncationUnsafeError>(m, "TruncationUnsafeError");

    py::class_<reservoir::CavityAtomParams>(m, "CavityAtomParams")
        .def(py::init(&make_params), py::arg("g_tau"), py::arg("kappa_hz") = 74e3,
             py::arg("wavelength_m") = 791.3e-9, py::arg("transit_time_s") = 139e-9,
             py::arg("n_bar") = 0.8, py::arg("delta_ac_hz") = 0.5e6,
             py::arg("gamma_atom_hz") = 25e3,
             py::arg("drive_sinc_half_argument") = false)
        .def_readonly("g", &reservoir::CavityAtomParams::g)
        .def_readonly("kappa", &reservoir::CavityAtomParams::kappa)
        .def_readonly("omega_a", &reservoir::CavityAtomParams::omega_a)
        .def_readonly("tau", &reservoir::CavityAtomParams::tau)
        .def_readwrite("N_bar", &reservoir::CavityAtomParams::N_bar)
        .def_readwrite("delta_ac", &reservoir::CavityAtomParams::delta_ac)
        .def("atoms_per_decay_time", &reservoir::atoms_per_decay_time);

    py::enum_<reservoir::PhaseMode>(m, "PhaseMode")
        .value("Coherent", reservoir::PhaseMode::Coherent)
        .value("Randomized", reservoir::PhaseMode::Randomized);

    py::class_<reservoir::ReservoirDerived>(m, "ReservoirDerived")
        .def_readonly("rho_ee", &reservoir::ReservoirDerived::rho_ee)
        .def_readonly("rho_gg", &reservoir::ReservoirDerived::rho_gg)
        .def_readonly("rho_eg", &reservoir::ReservoirDerived::rho_eg)
        .def_readonly("gamma_inj", &reservoir::ReservoirDerived::gamma_inj)
        .def_readonly("n_th", &reservoir::ReservoirDerived::n_th)
        .def_readonly("Gamma_r", &reservoir::ReservoirDerived::Gamma_r)
        .def_readonly("lambda_drive", &reservoir::ReservoirDerived::lambda_drive)
        .def_readonly("T_R", &reservoir::ReservoirDerived::T_R);

    m.def(
        "derive_reservoir",
        [](const reservoir::CavityAtomParams& p, double theta,
           reservoir::PhaseMode mode) {
            return reservoir::derive(p, {theta, mode});
        },
        py::arg("params"), py::arg("theta"),
        py::arg("phase_mode") = reservoir::PhaseMode::Coherent);
    m.def("calibrate_theta", &reservoir::calibrate_theta, py::arg("params"),
          py::arg("target_t_r_k"));

    // fock-space helpers return plain numpy-compatible matrices
    m.def("annihilation_operator",
          [](int dim) { return fock::annihilation_operator(dim).matrix; });
    m.def(
        "thermal_state",
        [](double n_th, int dim) { return fock::thermal_state(n_th, dim).matrix(); },
        py::arg("n_th"), py::arg("dim") = fock::kDefaultDim);
    m.def(
        "displaced_thermal_state",
        [](std::complex<double> alpha, double n_th, int dim) {
            return fock::displaced_thermal_state(alpha, n_th, dim).matrix();
        },
        py::arg("alpha"), py::arg("n_th"), py::arg("dim") = fock::kDefaultDim);
    m.def("thermal_entropy", &fock::thermal_entropy);
    m.def(
        "von_neumann_entropy",
        [](const linalg::Matrix& rho) {
            return fock::von_neumann_entropy(fock::FieldState::from_matrix(rho, 1.0));
        },
        py::arg("rho"));
    m.def(
        "ergotropy",
        [](const linalg::Matrix& rho, double hbar_omega) {
            return fock::ergotropy(fock::FieldState::from_matrix(rho, 1.0),
                                   hbar_omega);
        },
        py::arg("rho"), py::arg("hbar_omega"));
    m.def("relative_entropy_of_coherence", &fock::relative_entropy_of_coherence);
    m.def(
        "photon_statistics",
        [](const linalg::Matrix& rho) {
            const auto ps =
                fock::photon_statistics(fock::FieldState::from_matrix(rho, 1.0));
            return py::make_tuple(ps.n_mean, ps.g2_zero);
        },
        py::arg("rho"));
    m.def("displaced_thermal_g2", &fock::displaced_thermal_g2, py::arg("n_th"),
          py::arg("alpha_sq"));

    m.def(
        "steady_state_analytic",
        [](const reservoir::CavityAtomParams& p, double theta,
           reservoir::PhaseMode mode) {
            const auto ss = dynamics::steady_state_analytic(p, {theta, mode});
            return py::make_tuple(ss.alpha, ss.n_th, ss.n_total);
        },
        py::arg("params"), py::arg("theta"), py::arg("phase_mode"));
    m.def(
        "steady_state_numeric",
        [](const reservoir::CavityAtomParams& p, double theta,
           reservoir::PhaseMode mode, int dim) {
            return dynamics::steady_state_numeric(
                       dynamics::build_generator(p, {theta, mode}, dim))
                .matrix();
        },
        py::arg("params"), py::arg("theta"), py::arg("phase_mode"),
        py::arg("dim") = fock::kDefaultDim);
    m.def(
        "g2_correlation",
        [](const reservoir::CavityAtomParams& p, double theta,
           reservoir::PhaseMode mode, const std::vector<double>& taus, int dim) {
            const auto gen = dynamics::build_generator(p, {theta, mode}, dim);
            const auto ss = dynamics::steady_state_numeric(gen);
            return dynamics::g2_correlation(gen, ss, taus);
        },
        py::arg("params"), py::arg("theta"), py::arg("phase_mode"),
        py::arg("taus"), py::arg("dim") = 40);

    py::class_<engine::CycleSchedule>(m, "CycleSchedule")
        .def_static("from_detunings", &engine::CycleSchedule::from_detunings,
                    py::arg("omega_a"), py::arg("delta_1"), py::arg("delta_2"),
                    py::arg("n_grid") = 64)
        .def_readonly("omega_c1", &engine::CycleSchedule::omega_c1)
        .def_readonly("omega_c2", &engine::CycleSchedule::omega_c2);

    m.def("effective_cavity_temperature", &engine::effective_cavity_temperature,
          py::arg("n"), py::arg("n_th"), py::arg("omega_c"));
    m.def("work_frequency_shift", &engine::work_frequency_shift, py::arg("n"),
          py::arg("delta_nu_hz"));
    m.def("efficiency", &engine::efficiency, py::arg("n_th"), py::arg("n_sr"));

    m.def(
        "run_cycle",
        [](const reservoir::CavityAtomParams& p, const engine::CycleSchedule& s,
           double theta, bool thermal_only) {
            engine::CycleOptions opts;
            opts.thermal_only = thermal_only;
            return ledger_dict(engine::run_cycle(p, s, theta, opts));
        },
        py::arg("params"), py::arg("schedule"), py::arg("theta"),
        py::arg("thermal_only") = false);
    m.def(
        "scaling_sweep",
        [](const reservoir::CavityAtomParams& p, const engine::CycleSchedule& s,
           double theta, const std::vector<double>& n_bars) {
            const auto res = engine::scaling_sweep(p, s, theta, n_bars);
            py::list points;
            for (const auto& pt : res.points)
                points.append(py::make_tuple(pt.N_bar, pt.W_out));
            py::dict out;
            out["points"] = points;
            out["slope"] = res.slope;
            return out;
        },
        py::arg("params"), py::arg("schedule"), py::arg("theta"),
        py::arg("n_bar_values"));

    m.def(
        "run_trajectories",
        [](const reservoir::CavityAtomParams& p, double theta,
           reservoir::PhaseMode mode, double t_final, int dim, int n_trajectories,
           std::uint64_t seed, int sample_count, int threads) {
            traj::TrajectoryConfig cfg;
            cfg.params = p;
            cfg.spec = {theta, mode};
            cfg.t_final = t_final;
            cfg.dim = dim;
            cfg.n_trajectories = n_trajectories;
            cfg.seed = seed;
            cfg.record_emissions = true;
            cfg.sample_count = sample_count;
            const auto records = traj::run_ensemble(cfg, threads);
            const auto stats = traj::ensemble_statistics(records);
            py::dict out;
            out["times"] = stats.times;
            out["n_mean"] = stats.mean;
            out["n_stderr"] = stats.standard_error;
            py::list jumps;
            for (const auto& r : records) jumps.append(r.jump_times);
            out["jump_times"] = jumps;
            return out;
        },
        py::arg("params"), py::arg("theta"), py::arg("phase_mode"),
        py::arg("t_final"), py::arg("dim") = 30, py::arg("n_trajectories") = 100,
        py::arg("seed") = 0, py::arg("sample_count") = 200, py::arg("threads") = 1);

    m.def("run_acceptance_criteria", [](int threads) {
        py::list out;
        for (const auto& r : checks::run_acceptance_criteria(threads)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });
}
