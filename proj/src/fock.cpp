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

#include "srqe/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace srqe::fock {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Eigenvalues may dip slightly below zero from rounding; clip within the
// floor, reject below it.
double clip_probability(double p) {
    if (p < kEigenvalueFloor)
        throw std::domain_error("negative eigenvalue beyond tolerance in density matrix");
    return std::max(p, 0.0);
}

}  // namespace

FieldState FieldState::from_matrix(linalg::Matrix rho, double trunc_tol,
                                   double eigen_floor) {
    const auto n = rho.rows();
    if (n < 1 || rho.cols() != n)
        throw std::invalid_argument("FieldState: matrix must be square and non-empty");
    if (linalg::hermiticity_defect(rho) > kHermiticityTolerance)
        throw std::domain_error("FieldState: matrix is not Hermitian within 1e-12");

    rho = linalg::hermitize(rho);
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance)
        throw std::domain_error("FieldState: trace deviates from 1 beyond 1e-10");

    const Eigen::VectorXd ev = linalg::hermitian_eigenvalues(rho);
    if (ev.minCoeff() < eigen_floor)
        throw std::domain_error("FieldState: negative eigenvalue beyond tolerance");

    FieldState state;
    state.dim_ = static_cast<int>(n);
    state.matrix_ = std::move(rho);
    state.top_population_ = state.matrix_(n - 1, n - 1).real();
    state.truncation_safe_ = state.top_population_ < trunc_tol;
    return state;
}

FieldOperator annihilation_operator(int dim) {
    if (dim < 2) throw std::invalid_argument("annihilation_operator: dim must be >= 2");
    linalg::Matrix a = linalg::Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {dim, std::move(a)};
}

FieldOperator creation_operator(int dim) {
    FieldOperator a = annihilation_operator(dim);
    return {dim, a.matrix.adjoint()};
}

FieldOperator number_operator(int dim) {
    if (dim < 2) throw std::invalid_argument("number_operator: dim must be >= 2");
    linalg::Matrix n = linalg::Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return {dim, std::move(n)};
}

linalg::Matrix displacement_operator(std::complex<double> alpha, int dim) {
    const FieldOperator a = annihilation_operator(dim);
    const linalg::Matrix arg =
        alpha * a.matrix.adjoint() - std::conj(alpha) * a.matrix;
    return linalg::expm(arg, 1e-12);
}

FieldState thermal_state(double n_th, int dim) {
    if (n_th < 0.0) throw std::domain_error("thermal_state: n_th must be >= 0");
    if (dim < 2) throw std::invalid_argument("thermal_state: dim must be >= 2");

    linalg::Matrix rho = linalg::Matrix::Zero(dim, dim);
    if (n_th == 0.0) {
        rho(0, 0) = 1.0;
    } else {
        const double r = n_th / (n_th + 1.0);
        double norm = 0.0;
        std::vector<double> p(dim);
        for (int n = 0; n < dim; ++n) {
            p[n] = std::pow(r, n);
            norm += p[n];
        }
        for (int n = 0; n < dim; ++n) rho(n, n) = p[n] / norm;
    }
    return FieldState::from_matrix(std::move(rho));
}

FieldState displaced_thermal_state(std::complex<double> alpha, double n_th, int dim) {
    const FieldState th = thermal_state(n_th, dim);
    if (alpha == std::complex<double>(0.0, 0.0)) return th;
    const linalg::Matrix d = displacement_operator(alpha, dim);
    linalg::Matrix rho = d * th.matrix() * d.adjoint();
    // The displacement leaks a little probability past the truncation edge;
    // restore the unit trace before validation.
    rho /= rho.trace().real();
    return FieldState::from_matrix(std::move(rho));
}

FieldState fock_state(int n, int dim) {
    if (dim < 2 || n < 0 || n >= dim)
        throw std::invalid_argument("fock_state: need 0 <= n < dim");
    linalg::Matrix rho = linalg::Matrix::Zero(dim, dim);
    rho(n, n) = 1.0;
    return FieldState::from_matrix(std::move(rho));
}

double von_neumann_entropy(const FieldState& rho) {
    const Eigen::VectorXd ev = linalg::hermitian_eigenvalues(rho.matrix());
    double s = 0.0;
    for (int i = 0; i < ev.size(); ++i) s -= xlogx(clip_probability(ev(i)));
    return s;
}

double thermal_entropy(double n_th) {
    if (n_th < 0.0) throw std::domain_error("thermal_entropy: n_th must be >= 0");
    if (n_th == 0.0) return 0.0;
    return (n_th + 1.0) * std::log(n_th + 1.0) - n_th * std::log(n_th);
}

double ergotropy(const FieldState& rho, double hbar_omega) {
    if (hbar_omega <= 0.0) throw std::domain_error("ergotropy: hbar_omega must be > 0");
    const int dim = rho.dim();

    double energy = 0.0;
    for (int n = 0; n < dim; ++n) energy += n * rho.population(n);
    energy *= hbar_omega;

    Eigen::VectorXd ev = linalg::hermitian_eigenvalues(rho.matrix());
    // Passive pairing: largest population on the lowest level.
    std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
    double passive_energy = 0.0;
    for (int k = 0; k < dim; ++k)
        passive_energy += clip_probability(ev(k)) * k * hbar_omega;

    return energy - passive_energy;
}

double relative_entropy_of_coherence(const linalg::Matrix& rho) {
    const Eigen::VectorXd ev = linalg::hermitian_eigenvalues(rho);
    double s_state = 0.0;
    for (int i = 0; i < ev.size(); ++i) s_state -= xlogx(clip_probability(ev(i)));

    double s_dephased = 0.0;
    for (int i = 0; i < rho.rows(); ++i)
        s_dephased -= xlogx(clip_probability(rho(i, i).real()));

    return s_dephased - s_state;
}

PhotonStatistics photon_statistics(const FieldState& rho) {
    double n_mean = 0.0;
    double n2 = 0.0;  // <a†a†aa> = <n(n-1)>
    for (int n = 0; n < rho.dim(); ++n) {
        const double p = rho.population(n);
        n_mean += n * p;
        n2 += static_cast<double>(n) * (n - 1.0) * p;
    }
    if (n_mean <= 0.0)
        throw std::domain_error("photon_statistics: g2 undefined for zero mean photon number");
    return {n_mean, n2 / (n_mean * n_mean)};
}

double displaced_thermal_g2(double n_th, double alpha_sq) {
    const double n = n_th + alpha_sq;
    if (n <= 0.0)
        throw std::domain_error("displaced_thermal_g2: zero mean photon number");
    return 1.0 + (n_th * n_th + 2.0 * n_th * alpha_sq) / (n * n);
}

}  // namespace srqe::fock
