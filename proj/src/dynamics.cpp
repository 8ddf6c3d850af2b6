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

#include "srqe/dynamics.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "srqe/errors.hpp"

namespace srqe::dynamics {

namespace {

using linalg::Complex;
using linalg::Matrix;

double sqrt_i(int n) { return std::sqrt(static_cast<double>(n)); }

}  // namespace

void LindbladGenerator::validate() const {
    if (dim < 2) throw std::invalid_argument("LindbladGenerator: dim must be >= 2");
    if (rate_up < 0.0)
        throw std::invalid_argument("LindbladGenerator: rate_up must be >= 0");
    if (rate_down <= rate_up)
        throw std::invalid_argument(
            "LindbladGenerator: rate_down must exceed rate_up (stability)");
}

fock::FieldOperator LindbladGenerator::hamiltonian() const {
    const fock::FieldOperator a = fock::annihilation_operator(dim);
    Matrix h = lambda * a.matrix.adjoint() + std::conj(lambda) * a.matrix;
    return {dim, std::move(h)};
}

LindbladGenerator build_generator(const reservoir::CavityAtomParams& params,
                                  const reservoir::AtomEnsembleSpec& spec, int dim) {
    const reservoir::ReservoirDerived d = reservoir::derive(params, spec);
    return generator_from_rates(d.lambda_drive, d.n_th, d.Gamma_r, dim);
}

LindbladGenerator generator_from_rates(std::complex<double> lambda, double n_th,
                                       double gamma_r, int dim) {
    LindbladGenerator gen;
    gen.dim = dim;
    gen.lambda = lambda;
    gen.rate_up = gamma_r * n_th;
    gen.rate_down = gamma_r * (n_th + 1.0);
    gen.validate();
    return gen;
}

// The field operators are bidiagonal, so every term of the generator is a
// shifted scaling of rho. Mirrors the truncated matrix algebra exactly,
// including the top-corner elements of a a†.
linalg::Matrix apply_rhs(const LindbladGenerator& gen, const linalg::Matrix& rho) {
    const int d = gen.dim;
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("apply_rhs: dimension mismatch");

    const Complex i_unit(0.0, 1.0);
    const Complex lam = gen.lambda;
    const Complex lamc = std::conj(lam);
    Matrix out = Matrix::Zero(d, d);

    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            Complex v(0.0, 0.0);

            // -i [lambda a† + lambda* a, rho]
            if (m >= 1) v += -i_unit * lam * sqrt_i(m) * rho(m - 1, n);
            if (n + 1 < d) v += i_unit * lam * sqrt_i(n + 1) * rho(m, n + 1);
            if (m + 1 < d) v += -i_unit * lamc * sqrt_i(m + 1) * rho(m + 1, n);
            if (n >= 1) v += i_unit * lamc * sqrt_i(n) * rho(m, n - 1);

            // rate_up * (a† rho a - {a a†, rho}/2); (a a†)_kk = k+1 except 0
            // at the truncation edge.
            if (m >= 1 && n >= 1)
                v += gen.rate_up * sqrt_i(m) * sqrt_i(n) * rho(m - 1, n - 1);
            const double aad_m = m + 1 < d ? m + 1.0 : 0.0;
            const double aad_n = n + 1 < d ? n + 1.0 : 0.0;
            v += -0.5 * gen.rate_up * (aad_m + aad_n) * rho(m, n);

            // rate_down * (a rho a† - {a†a, rho}/2)
            if (m + 1 < d && n + 1 < d)
                v += gen.rate_down * sqrt_i(m + 1) * sqrt_i(n + 1) * rho(m + 1, n + 1);
            v += -0.5 * gen.rate_down * (m + n) * rho(m, n);

            out(m, n) = v;
        }
    }
    return out;
}

namespace {

// Dormand-Prince 5(4) coefficients.
struct Dopri5 {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                            e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
};

class Dopri5Stepper {
  public:
    Dopri5Stepper(const LindbladGenerator& gen, Matrix state, double tol)
        : gen_(gen), y_(std::move(state)), tol_(tol) {
        k1_ = apply_rhs(gen_, y_);
        const double rhs_scale = std::max(linalg::max_abs(k1_), 1e-300);
        h_ = std::min(0.01 / rhs_scale, 1.0);
        t_scale_ = 1.0 / std::max(gen_.rate_down, 1e-300);
    }

    double time() const { return t_; }
    const Matrix& state() const { return y_; }

    // Advance to exactly t_target.
    void advance_to(double t_target, const EvolveOptions& opts) {
        while (t_ < t_target) {
            const double h = std::min(h_, t_target - t_);
            step(h, opts);
        }
    }

  private:
    void step(double h, const EvolveOptions& opts) {
        using D = Dopri5;
        const Matrix k2 = apply_rhs(gen_, y_ + h * D::a21 * k1_);
        const Matrix k3 = apply_rhs(gen_, y_ + h * (D::a31 * k1_ + D::a32 * k2));
        const Matrix k4 =
            apply_rhs(gen_, y_ + h * (D::a41 * k1_ + D::a42 * k2 + D::a43 * k3));
        const Matrix k5 = apply_rhs(
            gen_, y_ + h * (D::a51 * k1_ + D::a52 * k2 + D::a53 * k3 + D::a54 * k4));
        const Matrix k6 =
            apply_rhs(gen_, y_ + h * (D::a61 * k1_ + D::a62 * k2 + D::a63 * k3 +
                                      D::a64 * k4 + D::a65 * k5));
        Matrix y5 = y_ + h * (D::b1 * k1_ + D::b3 * k3 + D::b4 * k4 + D::b5 * k5 +
                              D::b6 * k6);
        const Matrix k7 = apply_rhs(gen_, y5);
        const Matrix err_mat = h * (D::e1 * k1_ + D::e3 * k3 + D::e4 * k4 +
                                    D::e5 * k5 + D::e6 * k6 + D::e7 * k7);

        const double scale = tol_ * std::max(1.0, linalg::max_abs(y_));
        const double err = linalg::max_abs(err_mat) / scale;

        if (err <= 1.0) {
            t_ += h;
            y5 = linalg::hermitize(y5);
            const double tr = y5.trace().real();
            if (std::abs(tr - 1.0) > opts.trace_drift_max)
                throw std::runtime_error("evolve: trace drift exceeded tolerance");
            y5 /= tr;
            if (y5(gen_.dim - 1, gen_.dim - 1).real() >= opts.trunc_tol)
                throw TruncationUnsafeError(
                    "evolve: state reached the truncation edge");
            y_ = std::move(y5);
            k1_ = k7;  // FSAL
        }

        const double factor =
            std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h_ = h * factor;
        if (h_ < 1e-16 * t_scale_)
            throw StepSizeUnderflowError("evolve: step size underflow");
    }

    const LindbladGenerator& gen_;
    Matrix y_;
    Matrix k1_;
    double tol_;
    double t_ = 0.0;
    double h_ = 0.0;
    double t_scale_ = 1.0;
};

}  // namespace

std::vector<fock::FieldState> evolve(const LindbladGenerator& gen,
                                     const fock::FieldState& rho0,
                                     std::span<const double> sample_times,
                                     const EvolveOptions& opts) {
    gen.validate();
    if (rho0.dim() != gen.dim) throw std::invalid_argument("evolve: dimension mismatch");
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        if (sample_times[i] < 0.0)
            throw std::invalid_argument("evolve: sample times must be >= 0");
        if (i > 0 && sample_times[i] < sample_times[i - 1])
            throw std::invalid_argument("evolve: sample times must be ascending");
    }

    std::vector<fock::FieldState> out;
    out.reserve(sample_times.size());
    Dopri5Stepper stepper(gen, rho0.matrix(), opts.tol);
    for (const double t : sample_times) {
        stepper.advance_to(t, opts);
        out.push_back(fock::FieldState::from_matrix(stepper.state(), opts.trunc_tol,
                                                    opts.positivity_floor));
    }
    return out;
}

fock::FieldState steady_state_numeric(const LindbladGenerator& gen) {
    gen.validate();
    const int d = gen.dim;
    const int n2 = d * d;

    using Sparse = Eigen::SparseMatrix<Complex>;

    Sparse a(d, d), id(d, d);
    {
        std::vector<Eigen::Triplet<Complex>> ta, ti;
        for (int n = 1; n < d; ++n) ta.emplace_back(n - 1, n, Complex(sqrt_i(n), 0.0));
        for (int n = 0; n < d; ++n) ti.emplace_back(n, n, Complex(1.0, 0.0));
        a.setFromTriplets(ta.begin(), ta.end());
        id.setFromTriplets(ti.begin(), ti.end());
    }
    const Sparse ad = a.adjoint();
    const Sparse h = gen.lambda * ad + std::conj(gen.lambda) * a;

    const auto kron = [](const Sparse& x, const Sparse& y) {
        Sparse out(x.rows() * y.rows(), x.cols() * y.cols());
        std::vector<Eigen::Triplet<Complex>> t;
        t.reserve(static_cast<std::size_t>(x.nonZeros()) * y.nonZeros());
        for (int kx = 0; kx < x.outerSize(); ++kx)
            for (Sparse::InnerIterator ix(x, kx); ix; ++ix)
                for (int ky = 0; ky < y.outerSize(); ++ky)
                    for (Sparse::InnerIterator iy(y, ky); iy; ++iy)
                        t.emplace_back(ix.row() * y.rows() + iy.row(),
                                       ix.col() * y.cols() + iy.col(),
                                       ix.value() * iy.value());
        out.setFromTriplets(t.begin(), t.end());
        return out;
    };

    // Vectorized generator, column-major: vec(A rho B) = (B^T (x) A) vec(rho).
    const auto dissipator = [&](const Sparse& c) {
        const Sparse cdc = (c.adjoint() * c).pruned();
        const Sparse cc = c.conjugate();
        const Sparse cdct = cdc.transpose();
        return Sparse(kron(cc, c) - 0.5 * kron(id, cdc) - 0.5 * kron(cdct, id));
    };

    const Complex i_unit(0.0, 1.0);
    const Sparse ht = h.transpose();
    Sparse liouville = Sparse(-i_unit * (kron(id, h) - kron(ht, id))) +
                       Sparse(gen.rate_up * dissipator(ad)) +
                       Sparse(gen.rate_down * dissipator(a));

    // Replace one row with the trace constraint; the unique steady state is
    // then the solution of a nonsingular sparse system.
    Eigen::SparseMatrix<Complex> sys(n2, n2);
    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(liouville.nonZeros()) + d);
    for (int k = 0; k < liouville.outerSize(); ++k)
        for (Sparse::InnerIterator it(liouville, k); it; ++it)
            if (it.row() != 0) triplets.emplace_back(it.row(), it.col(), it.value());
    for (int k = 0; k < d; ++k) triplets.emplace_back(0, k * d + k, Complex(1.0, 0.0));
    sys.setFromTriplets(triplets.begin(), triplets.end());
    sys.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<Complex>> solver;
    solver.compute(sys);
    if (solver.info() != Eigen::Success)
        throw DegenerateSteadyStateError(
            "steady_state_numeric: singular system, null space is not one-dimensional");

    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n2);
    rhs(0) = 1.0;
    const Eigen::VectorXcd x = solver.solve(rhs);

    Matrix rho = Eigen::Map<const Matrix>(x.data(), d, d);
    rho = linalg::hermitize(rho);
    rho /= rho.trace().real();

    // Residual against the original generator distinguishes a genuine fixed
    // point from a defective factorization.
    const double residual = linalg::max_abs(apply_rhs(gen, rho));
    if (residual > 1e-6 * gen.rate_down)
        throw DegenerateSteadyStateError("steady_state_numeric: fixed-point residual too large");

    return fock::FieldState::from_matrix(std::move(rho));
}

AnalyticSteadyState steady_state_analytic(const reservoir::CavityAtomParams& params,
                                          const reservoir::AtomEnsembleSpec& spec) {
    const reservoir::ReservoirDerived d = reservoir::derive(params, spec);
    AnalyticSteadyState out;
    out.alpha = Complex(0.0, -2.0) * d.lambda_drive / d.Gamma_r;
    out.n_th = d.n_th;
    out.n_total = d.n_th + std::norm(out.alpha);
    return out;
}

std::vector<double> g2_correlation(const LindbladGenerator& gen,
                                   const fock::FieldState& rho_ss,
                                   std::span<const double> tau_grid, double tol) {
    gen.validate();
    const int d = gen.dim;
    const Matrix a = fock::annihilation_operator(d).matrix;

    const double n_mean = (a.adjoint() * a * rho_ss.matrix()).trace().real();
    if (n_mean <= 0.0)
        throw std::domain_error("g2_correlation: zero mean photon number");

    // a rho a† is positive with trace n_mean; evolve it normalized and put
    // the weight back at readout.
    Matrix seed = a * rho_ss.matrix() * a.adjoint();
    seed /= seed.trace().real();

    EvolveOptions opts;
    opts.tol = tol;
    opts.trunc_tol = 1.0;  // the regression seed may sit higher in the ladder
    opts.trace_drift_max = 1e-8;

    const fock::FieldState sigma0 =
        fock::FieldState::from_matrix(std::move(seed), 1.0, opts.positivity_floor);
    const std::vector<fock::FieldState> sigmas = evolve(gen, sigma0, tau_grid, opts);

    std::vector<double> g2(tau_grid.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        double n_sigma = 0.0;
        for (int n = 0; n < d; ++n) n_sigma += n * sigmas[i].population(n);
        g2[i] = n_sigma / n_mean;
    }
    return g2;
}

}  // namespace srqe::dynamics
