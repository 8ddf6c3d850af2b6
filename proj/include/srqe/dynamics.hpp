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
#include <span>
#include <vector>

#include "srqe/fock.hpp"
#include "srqe/reservoir.hpp"

namespace srqe::dynamics {

// drho/dt = -i[H/hbar, rho] + rate_up L[a†]rho + rate_down L[a]rho,
// with H/hbar = lambda a† + lambda* a and L[c]rho = c rho c† - {c†c, rho}/2.
struct LindbladGenerator {
    int dim = 0;
    std::complex<double> lambda;  // rad/s
    double rate_up = 0.0;         // Gamma_r * n_th, acts on a†
    double rate_down = 0.0;       // Gamma_r * (n_th + 1), acts on a

    void validate() const;  // rate_down > rate_up >= 0, dim >= 2
    fock::FieldOperator hamiltonian() const;
    double gamma_r() const { return rate_down - rate_up; }
};

LindbladGenerator build_generator(const reservoir::CavityAtomParams& params,
                                  const reservoir::AtomEnsembleSpec& spec, int dim);

LindbladGenerator generator_from_rates(std::complex<double> lambda, double n_th,
                                       double gamma_r, int dim);

// Right-hand side of the master equation; traceless and Hermitian.
linalg::Matrix apply_rhs(const LindbladGenerator& gen, const linalg::Matrix& rho);

struct EvolveOptions {
    double tol = 1e-9;          // local error per step
    double trunc_tol = fock::kTruncationTolerance;
    double trace_drift_max = 1e-9;
    double positivity_floor = -1e-8;  // integration noise allowance
};

// Adaptive Dormand-Prince 5(4) integration with samples at the requested
// times (ascending, >= 0). Each accepted step is hermitized and the trace
// drift renormalized below trace_drift_max, rejected above it.
std::vector<fock::FieldState> evolve(const LindbladGenerator& gen,
                                     const fock::FieldState& rho0,
                                     std::span<const double> sample_times,
                                     const EvolveOptions& opts = {});

// Steady state as the null vector of the vectorized generator (sparse LU
// with a trace-normalization row).
fock::FieldState steady_state_numeric(const LindbladGenerator& gen);

struct AnalyticSteadyState {
    std::complex<double> alpha;  // -2i lambda / Gamma_r
    double n_th;
    double n_total;              // n_th + |alpha|^2
};

AnalyticSteadyState steady_state_analytic(const reservoir::CavityAtomParams& params,
                                          const reservoir::AtomEnsembleSpec& spec);

// g2(tau) = tr{a†a e^(L tau)[a rho_ss a†]} / <a†a>^2 via the quantum
// regression theorem. tau_grid ascending, starting at >= 0.
std::vector<double> g2_correlation(const LindbladGenerator& gen,
                                   const fock::FieldState& rho_ss,
                                   std::span<const double> tau_grid,
                                   double tol = 1e-9);

}  // namespace srqe::dynamics
