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

#include <array>
#include <span>
#include <vector>

#include "srqe/reservoir.hpp"

namespace srqe::engine {

// Four-stroke frequency program. A->B and C->D are isochoric (fixed cavity
// volume at detuning delta_1 and delta_2), B->C and D->A isoenergetic sweeps
// between them. omega_c = omega_a - delta_ac.
struct CycleSchedule {
    double delta_1 = 0.0;   // rad/s, detuning at small volume (A, B)
    double delta_2 = 0.0;   // rad/s, detuning at large volume (C, D)
    double omega_c1 = 0.0;  // rad/s
    double omega_c2 = 0.0;  // rad/s
    int n_grid = 64;        // quasi-static points per stroke
    std::array<double, 4> stroke_durations{1e-5, 1e-5, 1e-5, 1e-5};  // s

    static CycleSchedule from_detunings(double omega_a, double delta_1,
                                        double delta_2, int n_grid = 64);
    void validate() const;
};

enum class CycleMode { QuasiStatic, Dynamic };

enum Stroke { kAB = 0, kBC = 1, kCD = 2, kDA = 3 };

struct StrokeLedger {
    double W = 0.0;           // J, positive when done by the engine
    double Q = 0.0;           // J, positive when absorbed by the engine
    double dS = 0.0;          // k_B units
    double dErgotropy = 0.0;  // J, reservoir ergotropy transferred
};

struct PvPoint {
    double delta_ac;  // rad/s
    double n;         // photon number
    int stroke;       // Stroke enum value
};

struct CycleLedger {
    std::array<StrokeLedger, 4> strokes;

    double n_th = 0.0, n_sr = 0.0;              // photon numbers at A, B
    double n_th_prime = 0.0, n_sr_prime = 0.0;  // photon numbers at D, C
    double W_out = 0.0, Q_in = 0.0, Q_out = 0.0;
    double eta = 0.0;
    double T_c_sr = 0.0, T_c_th = 0.0, T_R = 0.0;  // K
    std::vector<PvPoint> pv_points;
    bool negative_work = false;

    // exact-identity residuals (relative)
    double first_law_residual = 0.0;
    double entropy_closure_residual = 0.0;
    double heat_symmetry_residual = 0.0;

    // reservoir diagnostics at fixed theta across the detuning sweep
    double t_r_drift_rel = 0.0;
    double coherence_per_atom = 0.0;     // k_B units
    double t_r_delta_c_per_atom = 0.0;   // J
    double cycle_energy_residual = 0.0;  // dynamic mode only
    double theta = 0.0;
};

// T_c = n hbar omega_c / [k_B log(1 + 1/n_th) n_th]; equals T_R at n = n_th.
double effective_cavity_temperature(double n, double n_th, double omega_c);

// W = -n h delta_nu (Eq. for the radiation-pressure work of a frequency
// shift delta_nu in Hz).
double work_frequency_shift(double n, double delta_nu);

// n_start hbar omega_start ln(omega_start / omega_end), the quasi-static
// work with n*omega held constant.
double stroke_work_isoenergetic(double n_start, double omega_start, double omega_end);

// (n_after - n_before) hbar omega_c.
double stroke_heat_isochoric(double n_before, double n_after, double omega_c);

// eta = 1 - n_th / n_sr.
double efficiency(double n_th, double n_sr);

struct CycleOptions {
    CycleMode mode = CycleMode::QuasiStatic;
    bool thermal_only = false;  // run every stroke with a randomized pump
    int dim = 60;               // dynamic mode only
    double tol = 1e-9;          // dynamic mode only
};

CycleLedger run_cycle(const reservoir::CavityAtomParams& params,
                      const CycleSchedule& schedule, double theta,
                      const CycleOptions& opts = {});

struct ScalingPoint {
    double N_bar;
    double W_out;  // J
};

struct ScalingResult {
    std::vector<ScalingPoint> points;
    double slope = 0.0;  // least-squares d ln W / d ln N_bar
};

// Quasi-static work per cycle across N_bar at fixed theta, with the
// log-log slope of the sweep.
ScalingResult scaling_sweep(const reservoir::CavityAtomParams& params,
                            const CycleSchedule& schedule, double theta,
                            std::span<const double> n_bar_values);

struct ErgotropyLedger {
    std::array<double, 4> dErgotropy{};  // J per stroke
    double coherence_per_atom = 0.0;     // k_B units, coherent-mode atom
    double t_r_delta_c_per_atom = 0.0;   // J
};

// Reservoir-side ergotropy bookkeeping for a completed ledger, with the
// per-atom relative entropy of coherence diagnostic.
ErgotropyLedger ergotropy_ledger(const CycleLedger& cycle,
                                 const Eigen::Matrix2cd& atom_coherent,
                                 const Eigen::Matrix2cd& atom_randomized);

}  // namespace srqe::engine
