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

#include "srqe/reservoir.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "srqe/constants.hpp"
#include "srqe/errors.hpp"

namespace srqe::reservoir {

namespace {

// gamma_inj (g tau)^2 sinc^2(delta tau / 2), the per-rate atomic prefactor.
double atomic_rate_prefactor(const CavityAtomParams& p) {
    const double gt = p.g * p.tau;
    const double s = sinc(0.5 * p.delta_ac * p.tau);
    return injection_rate(p) * gt * gt * s * s;
}

}  // namespace

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

void CavityAtomParams::validate() const {
    if (g <= 0.0) throw std::invalid_argument("CavityAtomParams: g must be > 0");
    if (kappa <= 0.0) throw std::invalid_argument("CavityAtomParams: kappa must be > 0");
    if (tau <= 0.0) throw std::invalid_argument("CavityAtomParams: tau must be > 0");
    if (omega_a <= 0.0) throw std::invalid_argument("CavityAtomParams: omega_a must be > 0");
    if (N_bar < 0.0) throw std::invalid_argument("CavityAtomParams: N_bar must be >= 0");
}

std::vector<std::string> CavityAtomParams::warnings() const {
    std::vector<std::string> out;
    if (markov_warning())
        out.push_back("g*tau > 0.3: Markovian reservoir description is strained");
    return out;
}

void AtomEnsembleSpec::validate() const {
    if (theta < 0.0 || theta > std::numbers::pi)
        throw std::invalid_argument("AtomEnsembleSpec: theta must lie in [0, pi]");
    if (phase_mode == PhaseMode::Coherent && pump_detuning != 0.0)
        throw std::invalid_argument(
            "AtomEnsembleSpec: coherent mode requires a resonant pump (pump_detuning = 0)");
}

Eigen::Matrix2cd atom_density_matrix(const AtomEnsembleSpec& spec) {
    spec.validate();
    const double ce = std::cos(0.5 * spec.theta);  // amplitude on |e>
    const double cg = std::sin(0.5 * spec.theta);  // amplitude on |g>
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    rho(0, 0) = cg * cg;
    rho(1, 1) = ce * ce;
    if (spec.phase_mode == PhaseMode::Coherent) {
        rho(1, 0) = ce * cg;  // rho_eg
        rho(0, 1) = ce * cg;
    }
    return rho;
}

double injection_rate(const CavityAtomParams& p) {
    if (p.tau <= 0.0) throw std::invalid_argument("injection_rate: tau must be > 0");
    return p.N_bar / p.tau;
}

double thermal_photon_number(const CavityAtomParams& p,
                             const Eigen::Matrix2cd& atom_rho) {
    const double r = atomic_rate_prefactor(p);
    const double denom = (rho_gg(atom_rho) - rho_ee(atom_rho)) * r + 2.0 * p.kappa;
    if (denom <= 0.0)
        throw GainExceedsLossError(
            "thermal_photon_number: atomic gain exceeds cavity loss (masing regime)");
    return rho_ee(atom_rho) * r / denom;
}

double reservoir_rate(const CavityAtomParams& p, const Eigen::Matrix2cd& atom_rho) {
    const double rate =
        (rho_gg(atom_rho) - rho_ee(atom_rho)) * atomic_rate_prefactor(p) + 2.0 * p.kappa;
    if (rate <= 0.0)
        throw GainExceedsLossError("reservoir_rate: Gamma_r must be > 0 (masing regime)");
    return rate;
}

std::complex<double> drive_amplitude(const CavityAtomParams& p,
                                     const Eigen::Matrix2cd& atom_rho) {
    const double arg = p.drive_sinc == DriveSinc::AsPrinted ? p.delta_ac * p.tau
                                                            : 0.5 * p.delta_ac * p.tau;
    const std::complex<double> phase =
        std::exp(std::complex<double>(0.0, -0.5 * p.delta_ac * p.tau));
    return injection_rate(p) * sinc(arg) * (p.g * p.tau) * rho_eg(atom_rho) * phase;
}

double reservoir_temperature_from_n(double omega_a, double n_th) {
    if (n_th < 0.0) throw std::domain_error("reservoir_temperature: n_th must be >= 0");
    if (n_th == 0.0) return 0.0;
    return PhysicalConstants::hbar * omega_a /
           (PhysicalConstants::k_B * std::log1p(1.0 / n_th));
}

double reservoir_temperature(const CavityAtomParams& p,
                             const Eigen::Matrix2cd& atom_rho) {
    return reservoir_temperature_from_n(p.omega_a, thermal_photon_number(p, atom_rho));
}

double bose_einstein_occupation(double omega_a, double T_R) {
    if (T_R <= 0.0) throw std::domain_error("bose_einstein_occupation: T_R must be > 0");
    const double x = PhysicalConstants::hbar * omega_a / (PhysicalConstants::k_B * T_R);
    return 1.0 / std::expm1(x);
}

double atoms_per_decay_time(const CavityAtomParams& p) {
    if (p.kappa * p.tau <= 0.0)
        throw std::invalid_argument("atoms_per_decay_time: kappa*tau must be > 0");
    return p.N_bar / (p.kappa * p.tau);
}

ReservoirDerived derive(const CavityAtomParams& p, const AtomEnsembleSpec& spec) {
    p.validate();
    const Eigen::Matrix2cd rho = atom_density_matrix(spec);
    ReservoirDerived d;
    d.rho_ee = rho_ee(rho);
    d.rho_gg = rho_gg(rho);
    d.rho_eg = rho_eg(rho);
    d.gamma_inj = injection_rate(p);
    d.n_th = thermal_photon_number(p, rho);
    d.Gamma_r = reservoir_rate(p, rho);
    d.lambda_drive = drive_amplitude(p, rho);
    d.T_R = reservoir_temperature_from_n(p.omega_a, d.n_th);
    return d;
}

double calibrate_theta(const CavityAtomParams& p, double target_T_R) {
    p.validate();
    const double n_target = bose_einstein_occupation(p.omega_a, target_T_R);

    const auto n_at = [&](double theta) {
        return thermal_photon_number(
            p, atom_density_matrix({theta, PhaseMode::Randomized}));
    };

    // n_th decreases monotonically with theta. Keep the bracket clear of the
    // masing boundary near theta = 0 when the atomic gain can exceed 2*kappa.
    double lo = 1e-12;
    const double r0 = injection_rate(p) * std::pow(p.g * p.tau, 2) *
                      std::pow(sinc(0.5 * p.delta_ac * p.tau), 2);
    if (r0 >= 2.0 * p.kappa) {
        const double rho_ee_crit = (r0 + 2.0 * p.kappa) / (2.0 * r0);
        // cos^2(theta/2) < rho_ee_crit keeps Gamma_r positive.
        lo = 2.0 * std::acos(std::sqrt(rho_ee_crit)) + 1e-9;
    }
    double hi = std::numbers::pi;

    if (n_at(lo) < n_target)
        throw std::domain_error(
            "calibrate_theta: target reservoir temperature not reachable at these parameters");

    for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (n_at(mid) >= n_target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace srqe::reservoir
