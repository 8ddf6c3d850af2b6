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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace srqe::reservoir {

// Pump-phase handling for the injected atoms. Coherent: pump resonant with
// the cavity, all atoms share one phase. Randomized: pump far detuned, each
// atom arrives with a random phase and the ensemble coherence averages away.
enum class PhaseMode { Coherent, Randomized };

// The printed drive coefficient carries sinc(delta*tau) while the rates
// carry sinc^2(delta*tau/2); HalfArgument switches the drive to
// sinc(delta*tau/2) for sensitivity checks.
enum class DriveSinc { AsPrinted, HalfArgument };

struct CavityAtomParams {
    double g;           // atom-cavity coupling, rad/s (half width)
    double kappa;       // cavity decay, rad/s (half width)
    double gamma_atom;  // atomic decay, rad/s; documented, not in the model
    double omega_a;     // atomic resonance, rad/s
    double tau;         // transit time, s
    double N_bar;       // mean intracavity atom number
    double delta_ac;    // atom-cavity detuning, rad/s
    DriveSinc drive_sinc = DriveSinc::AsPrinted;

    void validate() const;  // throws std::invalid_argument
    // Markovian validity heuristic: each atom must only weakly perturb the
    // field during one transit.
    bool markov_warning() const { return g * tau > 0.3; }
    std::vector<std::string> warnings() const;
};

struct AtomEnsembleSpec {
    double theta;         // Bloch polar angle, rad; theta=0 is |e>
    PhaseMode phase_mode = PhaseMode::Coherent;
    double pump_detuning = 0.0;  // omega_p - omega_c, rad/s

    void validate() const;
};

// Closed-form reservoir quantities derived from one parameter set.
struct ReservoirDerived {
    double rho_ee = 0.0;
    double rho_gg = 0.0;
    std::complex<double> rho_eg;
    double gamma_inj = 0.0;     // atoms/s
    double n_th = 0.0;
    double Gamma_r = 0.0;       // rad/s
    std::complex<double> lambda_drive;  // rad/s
    double T_R = 0.0;           // K
};

// Unnormalized sinc, sin(x)/x with sinc(0) = 1.
double sinc(double x);

// 2x2 atom density matrix in the {|g>,|e>} basis; accessors below follow the
// rho_ee / rho_eg naming.
Eigen::Matrix2cd atom_density_matrix(const AtomEnsembleSpec& spec);

inline double rho_ee(const Eigen::Matrix2cd& m) { return m(1, 1).real(); }
inline double rho_gg(const Eigen::Matrix2cd& m) { return m(0, 0).real(); }
inline std::complex<double> rho_eg(const Eigen::Matrix2cd& m) { return m(1, 0); }

double injection_rate(const CavityAtomParams& p);

// Thermal photon number of the combined atom-beam + vacuum reservoir.
// Throws GainExceedsLossError when the denominator is not positive.
double thermal_photon_number(const CavityAtomParams& p,
                             const Eigen::Matrix2cd& atom_rho);

// Gamma_r = (rho_gg - rho_ee) gamma_inj (g tau)^2 sinc^2(delta tau / 2) + 2 kappa.
double reservoir_rate(const CavityAtomParams& p,
                      const Eigen::Matrix2cd& atom_rho);

// Coefficient of a† in the coarse-grained drive Hamiltonian H/hbar.
std::complex<double> drive_amplitude(const CavityAtomParams& p,
                                     const Eigen::Matrix2cd& atom_rho);

// Effective reservoir temperature from the Boltzmann ratio of the two
// Lindblad coefficients. Returns 0 when n_th = 0.
double reservoir_temperature(const CavityAtomParams& p,
                             const Eigen::Matrix2cd& atom_rho);
double reservoir_temperature_from_n(double omega_a, double n_th);

// Inverse: occupation of a Bose-Einstein distribution at temperature T_R.
double bose_einstein_occupation(double omega_a, double T_R);

// N_c = N_bar / (kappa tau), atoms traversing per cavity decay time.
double atoms_per_decay_time(const CavityAtomParams& p);

ReservoirDerived derive(const CavityAtomParams& p, const AtomEnsembleSpec& spec);

// Solves thermal_photon_number(theta) = n(T_R) for theta by bisection on
// (0, pi) to 1e-10. Throws std::domain_error when the target temperature is
// not reachable at these parameters.
double calibrate_theta(const CavityAtomParams& p, double target_T_R);

}  // namespace srqe::reservoir
