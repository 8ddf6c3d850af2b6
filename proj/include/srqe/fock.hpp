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

#include "srqe/linalg.hpp"

namespace srqe::fock {

inline constexpr int kDefaultDim = 60;
inline constexpr double kTruncationTolerance = 1e-8;
inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

// An operator on the truncated Fock space spanned by |0>..|dim-1>.
struct FieldOperator {
    int dim = 0;
    linalg::Matrix matrix;
};

// Density matrix of the cavity mode. Construction validates Hermiticity,
// unit trace and positivity; the top-level population is checked against
// the truncation tolerance and recorded as a safety flag rather than an
// error, so callers decide whether to enlarge the space.
class FieldState {
  public:
    static FieldState from_matrix(linalg::Matrix rho,
                                  double trunc_tol = kTruncationTolerance,
                                  double eigen_floor = kEigenvalueFloor);

    int dim() const { return dim_; }
    const linalg::Matrix& matrix() const { return matrix_; }
    bool truncation_safe() const { return truncation_safe_; }
    double top_population() const { return top_population_; }

    double population(int n) const { return matrix_(n, n).real(); }

  private:
    FieldState() = default;
    int dim_ = 0;
    linalg::Matrix matrix_;
    bool truncation_safe_ = true;
    double top_population_ = 0.0;
};

FieldOperator annihilation_operator(int dim);
FieldOperator creation_operator(int dim);
FieldOperator number_operator(int dim);

// exp(alpha a† - alpha* a), unitary on the truncated space.
linalg::Matrix displacement_operator(std::complex<double> alpha, int dim);

// Diagonal Bose-Einstein state with mean occupation n_th, renormalized on
// the truncated space.
FieldState thermal_state(double n_th, int dim = kDefaultDim);

// D(alpha) rho_th D†(alpha).
FieldState displaced_thermal_state(std::complex<double> alpha, double n_th,
                                   int dim = kDefaultDim);

FieldState fock_state(int n, int dim);

// -sum_i p_i ln p_i over the spectrum, in units of k_B. 0*ln0 := 0.
double von_neumann_entropy(const FieldState& rho);

// (n+1)ln(n+1) - n ln n, the entropy of a thermal (or displaced thermal)
// state in units of k_B.
double thermal_entropy(double n_th);

// Maximum energy extractable by unitaries, for H = hbar_omega a†a:
// tr(rho H) - sum_k r_k eps_k with r sorted descending, eps ascending.
double ergotropy(const FieldState& rho, double hbar_omega);

// S(diag(rho)) - S(rho) in the given basis, in units of k_B. Works for any
// density matrix (two-level atoms as well as field states).
double relative_entropy_of_coherence(const linalg::Matrix& rho);

struct PhotonStatistics {
    double n_mean;
    double g2_zero;
};

// n_mean = tr(rho a†a), g2_zero = tr(rho a†a†aa) / n_mean^2.
PhotonStatistics photon_statistics(const FieldState& rho);

// Closed form g2(0) of a displaced thermal state,
// 1 + (n_th^2 + 2 n_th |alpha|^2) / (n_th + |alpha|^2)^2.
double displaced_thermal_g2(double n_th, double alpha_sq);

}  // namespace srqe::fock
