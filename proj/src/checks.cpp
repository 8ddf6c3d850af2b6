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

#include "srqe/checks.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>

#include "srqe/constants.hpp"
#include "srqe/dynamics.hpp"
#include "srqe/engine.hpp"
#include "srqe/errors.hpp"
#include "srqe/fock.hpp"
#include "srqe/reservoir.hpp"
#include "srqe/trajectory.hpp"

namespace srqe::checks {

namespace {

using namespace srqe::reservoir;
using linalg::Complex;

constexpr double kWavelength = 791.3e-9;
constexpr double kTransitTime = 139e-9;

double omega_atom() { return two_pi * PhysicalConstants::c / kWavelength; }

CavityAtomParams reference_params(double g_tau, double n_bar, double delta_ac) {
    CavityAtomParams p;
    p.tau = kTransitTime;
    p.g = g_tau / p.tau;
    p.kappa = two_pi * 74e3;
    p.gamma_atom = two_pi * 25e3;
    p.omega_a = omega_atom();
    p.N_bar = n_bar;
    p.delta_ac = delta_ac;
    return p;
}

engine::CycleSchedule reference_schedule() {
    return engine::CycleSchedule::from_detunings(omega_atom(), two_pi * 0.5e6,
                                                 two_pi * 1.0e6);
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Solves theta so that |alpha|^2 / n_th matches the requested ratio; the
// ratio grows monotonically with theta below the masing threshold.
double theta_for_sr_ratio(const CavityAtomParams& p, double target) {
    const auto ratio_at = [&](double th) {
        const auto d = derive(p, {th, PhaseMode::Coherent});
        return std::norm(2.0 * d.lambda_drive / d.Gamma_r) / d.n_th;
    };
    double lo = 1e-6, hi = std::numbers::pi - 1e-6;
    if (ratio_at(hi) < target)
        throw std::domain_error("theta_for_sr_ratio: target ratio not reachable");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ratio_at(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Solves theta for a requested thermal occupation in randomized mode.
double theta_for_n_th(const CavityAtomParams& p, double target) {
    const auto n_at = [&](double th) {
        return thermal_photon_number(p, atom_density_matrix({th, PhaseMode::Randomized}));
    };
    double lo = 1e-6, hi = std::numbers::pi - 1e-6;
    if (n_at(lo) < target)
        throw std::domain_error("theta_for_n_th: target occupation not reachable");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (n_at(mid) >= target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// --- invariant battery ----------------------------------------------------

void check_fock_invariants(std::vector<CheckResult>& out) {
    bool pass = true;
    std::string detail = "ok";
    try {
        // commutator [a, a†] = 1 except the truncation corner
        const int d = 12;
        const auto a = fock::annihilation_operator(d);
        linalg::Matrix comm =
            a.matrix * a.matrix.adjoint() - a.matrix.adjoint() * a.matrix;
        comm -= linalg::Matrix::Identity(d, d);
        comm(d - 1, d - 1) -= static_cast<double>(-d);  // corner is 1 - d
        if (linalg::max_abs(comm) > 1e-12) {
            pass = false;
            detail = "commutator identity violated";
        }

        // displacement leaves the entropy of a thermal state unchanged
        const double s_th = fock::thermal_entropy(0.4);
        const double s_disp = fock::von_neumann_entropy(
            fock::displaced_thermal_state({1.1, 0.7}, 0.4, 60));
        if (std::abs(s_th - s_disp) > 1e-8) {
            pass = false;
            detail = fmt("entropy shifted by displacement: %.2e", s_th - s_disp);
        }

        // closed-form g2 equals the moment computation
        const auto st = fock::displaced_thermal_state(1.0, 0.1, 60);
        const auto ps = fock::photon_statistics(st);
        if (std::abs(ps.g2_zero - fock::displaced_thermal_g2(0.1, 1.0)) > 1e-9) {
            pass = false;
            detail = "g2 closed form disagrees with moments";
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    out.push_back({"fock invariants (commutator, entropy, g2)", pass, detail});
}

void check_reservoir_identities(std::vector<CheckResult>& out) {
    bool pass = true;
    std::string detail = "ok";
    try {
        const auto p = reference_params(0.1, 1.3, two_pi * 0.3e6);
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> theta_dist(0.5, 3.0);
        for (int i = 0; i < 32; ++i) {
            const double theta = theta_dist(rng);
            const auto rho = atom_density_matrix({theta, PhaseMode::Randomized});
            const double n = thermal_photon_number(p, rho);
            if (n <= 0.0) continue;
            // the compact and expanded temperature forms
            const double t1 = reservoir_temperature_from_n(p.omega_a, n);
            const double r =
                injection_rate(p) * std::pow(p.g * p.tau, 2) *
                std::pow(sinc(0.5 * p.delta_ac * p.tau), 2);
            const double t2 =
                PhysicalConstants::hbar * p.omega_a /
                (PhysicalConstants::k_B *
                 std::log(rho_gg(rho) / rho_ee(rho) +
                          2.0 * p.kappa / (rho_ee(rho) * r)));
            if (std::abs(t1 - t2) > 1e-12 * t1) {
                pass = false;
                detail = fmt("temperature forms differ at theta=%.3f", theta);
            }
            // T_R does not depend on the phase mode
            const double t_coh = reservoir_temperature(
                p, atom_density_matrix({theta, PhaseMode::Coherent}));
            if (std::abs(t_coh - t1) > 1e-12 * t1) {
                pass = false;
                detail = "T_R depends on phase mode";
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    out.push_back({"reservoir temperature identities", pass, detail});
}

void check_generator_stability_guard(std::vector<CheckResult>& out) {
    bool threw = false;
    try {
        dynamics::LindbladGenerator bad;
        bad.dim = 8;
        bad.rate_up = 2.0e5;
        bad.rate_down = 1.0e5;  // inverted rates must be rejected
        bad.validate();
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    out.push_back({"generator stability guard rejects rate_down <= rate_up", threw,
                   threw ? "rejected as required" : "accepted an unstable generator"});
}

void check_trajectory_determinism(std::vector<CheckResult>& out) {
    bool pass = true;
    std::string detail = "ok";
    try {
        traj::TrajectoryConfig cfg;
        cfg.params = reference_params(0.05, 1.0, 0.0);
        cfg.spec = {2.0, PhaseMode::Randomized};
        cfg.t_final = 4e-6;
        cfg.dim = 20;
        cfg.n_trajectories = 8;
        cfg.seed = 4242;
        cfg.record_emissions = true;
        cfg.sample_count = 40;
        const auto a = traj::run_ensemble(cfg, 1);
        const auto b = traj::run_ensemble(cfg, 4);
        for (int i = 0; i < cfg.n_trajectories; ++i) {
            if (a[i].jump_times != b[i].jump_times ||
                a[i].atom_arrival_times != b[i].atom_arrival_times ||
                a[i].sampled_n != b[i].sampled_n) {
                pass = false;
                detail = fmt("trajectory %d differs across thread counts", i);
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    out.push_back({"seeded trajectories identical across schedules", pass, detail});
}

void check_monotone_relaxation(std::vector<CheckResult>& out) {
    bool pass = true;
    std::string detail = "ok";
    try {
        const auto p = reference_params(0.08, 1.0, 0.0);
        const AtomEnsembleSpec spec{1.9, PhaseMode::Coherent};
        const int dim = 40;
        const auto gen = dynamics::build_generator(p, spec, dim);
        const auto ss = dynamics::steady_state_numeric(gen);

        std::vector<double> times;
        const auto d = derive(p, spec);
        for (int i = 0; i <= 24; ++i) times.push_back(i * 0.5 / d.Gamma_r);
        const auto path = dynamics::evolve(gen, fock::thermal_state(0.0, dim), times);
        double prev = 2.0;
        for (const auto& state : path) {
            const double dist = linalg::trace_distance(state.matrix(), ss.matrix());
            if (dist > prev + 1e-10) {
                pass = false;
                detail = fmt("trace distance increased to %.3e", dist);
            }
            prev = dist;
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    out.push_back({"dissipative contraction toward the steady state", pass, detail});
}

// --- acceptance criteria ----------------------------------------------------

CheckResult criterion_1_steady_state_oracle(int) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260801);
    std::uniform_real_distribution<double> g_tau_dist(0.02, 0.2);
    std::uniform_real_distribution<double> n_bar_dist(0.2, 2.5);
    std::uniform_real_distribution<double> delta_dist(0.0, two_pi * 1.0e6);
    std::uniform_real_distribution<double> theta_dist(0.6, 3.0);

    const int dim = 60;
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 20) {
        const auto p = reference_params(g_tau_dist(rng), n_bar_dist(rng), delta_dist(rng));
        const AtomEnsembleSpec spec{theta_dist(rng), accepted % 2 == 0
                                                         ? PhaseMode::Coherent
                                                         : PhaseMode::Randomized};
        dynamics::AnalyticSteadyState an;
        try {
            an = dynamics::steady_state_analytic(p, spec);
        } catch (const GainExceedsLossError&) {
            continue;
        }
        if (an.n_total > 3.0) continue;

        const auto ideal = fock::displaced_thermal_state(an.alpha, an.n_th, dim);
        if (!ideal.truncation_safe()) continue;

        const auto gen = dynamics::build_generator(p, spec, dim);
        const auto numeric = dynamics::steady_state_numeric(gen);
        worst = std::max(worst,
                         linalg::trace_distance(numeric.matrix(), ideal.matrix()));
        ++accepted;
    }
    const double elapsed = seconds_since(t0);
    const bool pass = worst < 1e-7 && elapsed < 60.0;
    return {"1. steady-state oracle equivalence (20 random sets, dim 60)", pass,
            fmt("max trace distance %.3e (< 1e-7), %.1f s (< 60 s)", worst, elapsed)};
}

CheckResult criterion_2_trajectory_vs_master(int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    // Resonant pump, gtau = 0.03, theta = pi/2: both phase modes must land
    // on the analytic steady state within 3 standard errors.
    std::string detail;
    bool pass = true;
    for (const auto mode : {PhaseMode::Coherent, PhaseMode::Randomized}) {
        traj::TrajectoryConfig cfg;
        cfg.params = reference_params(0.03, 1.0, 0.0);
        cfg.spec = {std::numbers::pi / 2.0, mode};
        cfg.dim = 30;
        cfg.n_trajectories = 1000;
        cfg.seed = 11001100;
        cfg.record_emissions = false;
        cfg.sample_count = 220;

        const auto an = dynamics::steady_state_analytic(cfg.params, cfg.spec);
        const auto d = derive(cfg.params, cfg.spec);
        cfg.t_final = 22.0 / d.Gamma_r;

        const auto records = traj::run_ensemble(cfg, threads);
        const auto [mean, se] =
            traj::window_average(records, 17.0 / d.Gamma_r, cfg.t_final);
        const double z = (mean - an.n_total) / se;
        detail += fmt("%s z=%.2f; ", mode == PhaseMode::Coherent ? "coh" : "rnd", z);
        if (std::abs(z) > 3.0) pass = false;
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 300.0) pass = false;
    return {"2. trajectory ensembles match the master equation (1000 each)", pass,
            detail + fmt("%.1f s (< 300 s)", elapsed)};
}

CheckResult criterion_3_g2_values(int threads) {
    bool pass = true;
    std::string detail;

    // (a) thermal regression value, deterministic
    {
        const auto gen = dynamics::generator_from_rates(0.0, 0.5, 1.0e6, 40);
        const auto ss = dynamics::steady_state_numeric(gen);
        const std::array<double, 1> tau0{0.0};
        const double g2 = dynamics::g2_correlation(gen, ss, tau0).front();
        detail += fmt("thermal reg g2(0)=%.5f; ", g2);
        if (std::abs(g2 - 2.0) > 1e-3) pass = false;
    }

    // (b) superradiant regression at |alpha|^2/n_th = 8.4721
    const double sr_ratio = 4.0 + 2.0 * std::sqrt(5.0);
    {
        const auto p = reference_params(0.17, 0.8, 0.0);
        const double theta = theta_for_sr_ratio(p, sr_ratio);
        const AtomEnsembleSpec spec{theta, PhaseMode::Coherent};
        const auto gen = dynamics::build_generator(p, spec, 40);
        const auto ss = dynamics::steady_state_numeric(gen);
        const std::array<double, 1> tau0{0.0};
        const double g2 = dynamics::g2_correlation(gen, ss, tau0).front();
        detail += fmt("SR reg g2(0)=%.5f; ", g2);
        if (std::abs(g2 - 1.20) > 0.01) pass = false;
    }

    // (c) trajectory histograms against the bin-averaged regression values,
    // in the weak-kick regime where the unraveling and the coarse-grained
    // generator coincide
    std::uint64_t histogram_seed = 31337;
    const auto histogram_case = [&](PhaseMode mode, double theta,
                                    const CavityAtomParams& p, double t_rec,
                                    int n_rec, double target,
                                    const char* label) {
        traj::TrajectoryConfig cfg;
        cfg.params = p;
        cfg.spec = {theta, mode};
        cfg.t_final = t_rec;
        cfg.dim = 30;
        cfg.n_trajectories = n_rec;
        cfg.seed = histogram_seed++;
        cfg.record_emissions = true;
        cfg.sample_count = 50;

        const auto d = derive(p, cfg.spec);
        const double a2 = std::norm(2.0 * d.lambda_drive / d.Gamma_r);
        const double n_tot = d.n_th + a2;

        const auto records = traj::run_ensemble(cfg, threads);
        const double bin = 0.1 / d.Gamma_r;
        const auto hist =
            traj::g2_from_records(records, bin, 6.0 / d.Gamma_r, 16.0 / d.Gamma_r);

        // bin averages of the regression decay over the first bin
        const double x1 = d.Gamma_r * bin;
        const double f1 = (1.0 - std::exp(-x1)) / x1;
        const double f2 = (1.0 - std::exp(-0.5 * x1)) / (0.5 * x1);
        const double expected =
            1.0 + (d.n_th * d.n_th * f1 + 2.0 * d.n_th * a2 * f2) / (n_tot * n_tot);

        const double z = (hist.g2[0] - expected) / hist.standard_error[0];
        detail += fmt("%s hist g2=%.3f (exp %.3f, z=%.2f, %zu events); ", label,
                      hist.g2[0], expected, z, hist.total_events);
        if (std::abs(hist.g2[0] - target) > 0.1) pass = false;
        if (std::abs(z) > 3.0) pass = false;
        if (hist.total_events < 100000) pass = false;
    };

    {
        auto p = reference_params(0.08, 2.0, 0.0);
        const double theta = theta_for_n_th(p, 0.10);
        histogram_case(PhaseMode::Randomized, theta, p, 0.06, 24, 2.0, "thermal");
    }
    {
        auto p = reference_params(0.08, 0.8, 0.0);
        const double theta = theta_for_sr_ratio(p, sr_ratio);
        histogram_case(PhaseMode::Coherent, theta, p, 0.05, 24, 1.2, "SR");
    }

    return {"3. g2(0) = 2.000 (thermal) and 1.20 (superradiant), regression + HBT",
            pass, detail};
}

CheckResult criterion_4_work_scaling(int) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> n_bars;
    for (int i = 0; i < 9; ++i) n_bars.push_back(0.5 * std::pow(5.0, i / 8.0));

    bool pass = true;
    std::string detail;
    for (const double t_r : {3200.0, 3800.0}) {
        auto p = reference_params(0.03, n_bars.back(), two_pi * 0.5e6);
        const double theta = calibrate_theta(p, t_r);
        const auto result =
            engine::scaling_sweep(p, reference_schedule(), theta, n_bars);
        detail += fmt("T_R=%.0f slope=%.4f; ", t_r, result.slope);
        if (result.slope < 1.85 || result.slope > 2.00) pass = false;
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) pass = false;
    return {"4. work scaling slope within [1.85, 2.00] at 3200 K and 3800 K", pass,
            detail + fmt("%.2f s (< 60 s)", elapsed)};
}

CheckResult criterion_5_work_per_cycle(int) {
    auto p = reference_params(0.17, 0.8, two_pi * 0.5e6);
    const double theta = calibrate_theta(p, 8000.0);
    const auto schedule = reference_schedule();
    const auto L = engine::run_cycle(p, schedule, theta);

    const double w_closed = (L.n_sr - L.n_th) * PhysicalConstants::hbar *
                            schedule.omega_c1 *
                            std::log(schedule.omega_c1 / schedule.omega_c2);
    const double w_eq2 = (L.n_sr - L.n_th) * PhysicalConstants::h * 0.5e6;

    const double factor = L.W_out / 3.3e-28;
    const double rel_closed = std::abs(L.W_out - w_closed) / w_closed;
    const double rel_eq2 = std::abs(L.W_out - w_eq2) / w_eq2;

    const bool pass = factor > 0.5 && factor < 2.0 && rel_closed < 1e-9 &&
                      rel_eq2 < 1e-8;
    return {"5. work per cycle near 3.3e-28 J with exact stroke identities", pass,
            fmt("W_out=%.4e J (%.2fx target), closed-form dev %.1e, "
                "frequency-shift dev %.1e",
                L.W_out, factor, rel_closed, rel_eq2)};
}

CheckResult criterion_6_temperature_ratio(int) {
    auto p = reference_params(0.03, 2.1, two_pi * 0.5e6);
    const double theta = calibrate_theta(p, 3200.0);
    const auto L = engine::run_cycle(p, reference_schedule(), theta);
    const double ratio = L.T_c_sr / L.T_c_th;
    const double n_ratio = L.n_sr / L.n_th;
    const bool pass =
        ratio >= 30.0 && ratio <= 50.0 && std::abs(ratio - n_ratio) < 1e-9 * ratio;
    return {"6. effective temperature ratio = 40 +- 10 at N=2.1, 3200 K", pass,
            fmt("T_c,sr/T_c,th = %.2f, n_sr/n_th = %.2f", ratio, n_ratio)};
}

CheckResult criterion_7_efficiency(int) {
    bool pass = true;
    std::string detail;
    for (const double n_bar : {2.0, 2.1, 2.5}) {
        auto p = reference_params(0.03, n_bar, two_pi * 0.5e6);
        const double theta = calibrate_theta(p, 3200.0);
        const auto L = engine::run_cycle(p, reference_schedule(), theta);
        const double eta_ref = engine::efficiency(L.n_th, L.n_sr);
        detail += fmt("N=%.1f eta=%.4f; ", n_bar, L.eta);
        if (L.eta < 0.95) pass = false;
        if (std::abs(L.eta - eta_ref) > 1e-9) pass = false;
    }
    return {"7. efficiency >= 0.95 for N_bar >= 2 at 3200 K", pass, detail};
}

CheckResult criterion_8_null_engine(int) {
    auto p = reference_params(0.17, 0.8, two_pi * 0.5e6);
    const double theta = calibrate_theta(p, 8000.0);
    engine::CycleOptions opts;
    opts.thermal_only = true;
    const auto L = engine::run_cycle(p, reference_schedule(), theta, opts);
    const bool pass = std::abs(L.W_out) < 1e-9 * L.Q_in;
    return {"8. all-randomized cycle extracts no work", pass,
            fmt("|W_out| = %.3e J vs 1e-9 Q_in = %.3e J", std::abs(L.W_out),
                1e-9 * L.Q_in)};
}

CheckResult criterion_9_thermodynamic_closure(int) {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> g_tau_dist(0.02, 0.2);
    std::uniform_real_distribution<double> n_bar_dist(0.3, 2.5);
    std::uniform_real_distribution<double> theta_dist(0.8, 2.9);

    bool pass = true;
    std::string detail = "ok";
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 12) {
        auto p = reference_params(g_tau_dist(rng), n_bar_dist(rng), two_pi * 0.5e6);
        const double theta = theta_dist(rng);
        engine::CycleLedger L;
        try {
            L = engine::run_cycle(p, reference_schedule(), theta);
        } catch (const GainExceedsLossError&) {
            continue;
        }
        ++accepted;

        const double first_law = L.first_law_residual;
        const double entropy = L.entropy_closure_residual;
        const double heat_sym = L.heat_symmetry_residual;
        const double erg =
            std::abs(L.strokes[engine::kBC].dErgotropy + L.W_out) /
            std::max(std::abs(L.W_out), 1e-300);
        const double eta_dev =
            std::abs(L.eta - (1.0 - L.n_th / L.n_sr)) / std::max(L.eta, 1e-300);
        worst = std::max({worst, first_law, entropy, heat_sym, erg, eta_dev});
        if (worst > 1e-9) {
            pass = false;
            detail = fmt("residual %.2e at sample %d", worst, accepted);
        }
    }
    if (pass) detail = fmt("max residual %.2e over 12 random cycles", worst);
    return {"9. first law, entropy closure, heat symmetry, ergotropy identity",
            pass, detail};
}

CheckResult criterion_10_ergotropy_oracle(int) {
    std::mt19937 rng(8086);
    std::uniform_real_distribution<double> mag(0.35, 1.5);
    std::uniform_real_distribution<double> phase(0.0, two_pi);
    std::uniform_real_distribution<double> n_th_dist(0.0, 0.9);

    const double hbar_omega = PhysicalConstants::hbar * omega_atom();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double r = mag(rng);
        const double n_th = std::min(n_th_dist(rng), 3.0 - r * r);
        const Complex alpha = std::polar(r, phase(rng));
        const auto state = fock::displaced_thermal_state(alpha, std::max(n_th, 0.0), 60);
        const double expected = hbar_omega * std::norm(alpha);
        const double got = fock::ergotropy(state, hbar_omega);
        worst = std::max(worst, std::abs(got - expected) / expected);
    }
    const bool pass = worst < 1e-6;
    return {"10. sorted-spectrum ergotropy of displaced thermal states", pass,
            fmt("max relative deviation %.2e (< 1e-6)", worst)};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite() {
    std::vector<CheckResult> out;
    check_fock_invariants(out);
    check_reservoir_identities(out);
    check_generator_stability_guard(out);
    check_trajectory_determinism(out);
    check_monotone_relaxation(out);
    return out;
}

std::vector<CheckResult> run_acceptance_criteria(int threads) {
    std::vector<CheckResult> out;
    out.push_back(criterion_1_steady_state_oracle(threads));
    out.push_back(criterion_2_trajectory_vs_master(threads));
    out.push_back(criterion_3_g2_values(threads));
    out.push_back(criterion_4_work_scaling(threads));
    out.push_back(criterion_5_work_per_cycle(threads));
    out.push_back(criterion_6_temperature_ratio(threads));
    out.push_back(criterion_7_efficiency(threads));
    out.push_back(criterion_8_null_engine(threads));
    out.push_back(criterion_9_thermodynamic_closure(threads));
    out.push_back(criterion_10_ergotropy_oracle(threads));
    return out;
}

std::vector<CheckResult> run_selfcheck(int threads) {
    std::vector<CheckResult> out = run_invariant_suite();
    auto acceptance = run_acceptance_criteria(threads);
    out.insert(out.end(), acceptance.begin(), acceptance.end());
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace srqe::checks
