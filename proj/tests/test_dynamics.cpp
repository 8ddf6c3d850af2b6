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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "srqe/constants.hpp"
#include "srqe/dynamics.hpp"
#include "srqe/errors.hpp"

using namespace srqe;
using namespace srqe::dynamics;
using reservoir::AtomEnsembleSpec;
using reservoir::CavityAtomParams;
using reservoir::PhaseMode;
using Complex = std::complex<double>;

namespace {

CavityAtomParams reference_params(double g_tau, double n_bar, double delta) {
    CavityAtomParams p;
    p.tau = 139e-9;
    p.g = g_tau / p.tau;
    p.kappa = two_pi * 74e3;
    p.gamma_atom = two_pi * 25e3;
    p.omega_a = two_pi * PhysicalConstants::c / 791.3e-9;
    p.N_bar = n_bar;
    p.delta_ac = delta;
    return p;
}

double mean_n(const fock::FieldState& st) {
    double n = 0.0;
    for (int k = 0; k < st.dim(); ++k) n += k * st.population(k);
    return n;
}

// Naive dense evaluation of the same master equation, as the oracle for the
// structured right-hand side.
linalg::Matrix dense_rhs(const LindbladGenerator& gen, const linalg::Matrix& rho) {
    const auto a = fock::annihilation_operator(gen.dim).matrix;
    const auto ad = a.adjoint().eval();
    const auto h = (gen.lambda * ad + std::conj(gen.lambda) * a).eval();
    const Complex i_unit(0.0, 1.0);
    const auto lind = [&](const linalg::Matrix& c) {
        return (c * rho * c.adjoint() -
                0.5 * (c.adjoint() * c * rho + rho * c.adjoint() * c))
            .eval();
    };
    return (-i_unit * (h * rho - rho * h) + gen.rate_up * lind(ad) +
            gen.rate_down * lind(a))
        .eval();
}

}  // namespace

TEST_CASE("generator construction") {
    SUBCASE("randomized pump carries no drive") {
        const auto gen = build_generator(reference_params(0.1, 1.5, 0.0),
                                         {1.2, PhaseMode::Randomized}, 20);
        CHECK(std::abs(gen.lambda) == 0.0);
        CHECK(gen.rate_down > gen.rate_up);
    }

    SUBCASE("no atoms leaves pure cavity decay") {
        const auto gen = build_generator(reference_params(0.1, 0.0, 0.0),
                                         {1.2, PhaseMode::Coherent}, 20);
        CHECK(gen.rate_up == 0.0);
        CHECK(gen.rate_down == doctest::Approx(2.0 * two_pi * 74e3).epsilon(1e-14));
    }

    SUBCASE("balanced populations leave Gamma_r = 2 kappa") {
        const auto gen =
            build_generator(reference_params(0.08, 1.3, 0.0),
                            {std::numbers::pi / 2, PhaseMode::Coherent}, 20);
        CHECK(gen.gamma_r() == doctest::Approx(2.0 * two_pi * 74e3).epsilon(1e-12));
    }

    SUBCASE("stability guard") {
        LindbladGenerator bad;
        bad.dim = 8;
        bad.lambda = 0.0;
        bad.rate_up = 2.0;
        bad.rate_down = 1.0;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
}

TEST_CASE("structured right-hand side equals the dense formula") {
    std::mt19937 rng(99);
    std::normal_distribution<double> g(0.0, 1.0);
    const auto gen = generator_from_rates({0.7, -0.3}, 0.4, 1.3, 10);

    for (int rep = 0; rep < 5; ++rep) {
        Eigen::VectorXcd psi(10);
        for (int n = 0; n < 10; ++n) psi(n) = Complex(g(rng), g(rng));
        psi.normalize();
        linalg::Matrix rho =
            0.5 * (psi * psi.adjoint()) + 0.5 * fock::thermal_state(0.4, 10).matrix();

        const auto fast = apply_rhs(gen, rho);
        const auto slow = dense_rhs(gen, rho);
        CHECK(linalg::max_abs(fast - slow) < 1e-13);
        CHECK(std::abs(fast.trace()) < 1e-14);

        // Hermitian in, Hermitian out
        CHECK(linalg::hermiticity_defect(fast) < 1e-13);
    }
}

TEST_CASE("fixed points of the generator") {
    SUBCASE("vacuum is stationary without drive or thermal input") {
        const auto gen = generator_from_rates(0.0, 0.0, 1.0, 12);
        const auto rhs = apply_rhs(gen, fock::thermal_state(0.0, 12).matrix());
        CHECK(linalg::max_abs(rhs) == 0.0);
    }

    SUBCASE("steady-state input yields a negligible derivative") {
        // O(1) rates keep the comparison absolute
        const auto gen = generator_from_rates({0.2, 0.1}, 0.3, 1.0, 30);
        const auto ss = steady_state_numeric(gen);
        CHECK(linalg::max_abs(apply_rhs(gen, ss.matrix())) < 1e-10);
    }
}

TEST_CASE("numeric steady states") {
    SUBCASE("no drive relaxes to the thermal state") {
        const auto gen = generator_from_rates(0.0, 0.45, 9e5, 50);
        const auto ss = steady_state_numeric(gen);
        CHECK(linalg::trace_distance(ss.matrix(),
                                     fock::thermal_state(0.45, 50).matrix()) < 1e-9);
    }

    SUBCASE("drive displaces the thermal state") {
        const auto p = reference_params(0.12, 1.1, two_pi * 0.3e6);
        const AtomEnsembleSpec spec{1.6, PhaseMode::Coherent};
        const auto an = steady_state_analytic(p, spec);
        const auto gen = build_generator(p, spec, 60);
        const auto ss = steady_state_numeric(gen);
        const auto ideal = fock::displaced_thermal_state(an.alpha, an.n_th, 60);
        CHECK(linalg::trace_distance(ss.matrix(), ideal.matrix()) < 1e-8);
        CHECK(mean_n(ss) == doctest::Approx(an.n_total).epsilon(1e-9));
    }

    SUBCASE("analytic phase convention") {
        const auto gen = generator_from_rates(Complex(0.5, 0.0), 0.1, 1.0, 8);
        (void)gen;
        // lambda real positive -> alpha purely negative imaginary
        const auto p = reference_params(0.1, 1.0, 0.0);
        const AtomEnsembleSpec spec{1.0, PhaseMode::Coherent};
        const auto an = steady_state_analytic(p, spec);
        CHECK(an.alpha.real() == doctest::Approx(0.0));
        CHECK(an.alpha.imag() < 0.0);
    }
}

TEST_CASE("time evolution") {
    const auto gen = generator_from_rates({2e5, 0.0}, 0.2, 1.1e6, 30);
    const auto rho0 = fock::thermal_state(0.0, 30);

    SUBCASE("zero time returns the initial state") {
        const std::array<double, 1> t0{0.0};
        const auto out = evolve(gen, rho0, t0);
        CHECK(linalg::trace_distance(out[0].matrix(), rho0.matrix()) < 1e-14);
    }

    SUBCASE("long-time limit matches the numeric steady state") {
        const std::array<double, 1> t{14.0 / gen.gamma_r()};
        const auto out = evolve(gen, rho0, t);
        const auto ss = steady_state_numeric(gen);
        CHECK(linalg::trace_distance(out[0].matrix(), ss.matrix()) < 1e-7);
    }

    SUBCASE("trace stays pinned and states stay positive") {
        std::vector<double> times;
        for (int i = 1; i <= 10; ++i) times.push_back(i * 0.4 / gen.gamma_r());
        for (const auto& st : evolve(gen, rho0, times)) {
            CHECK(std::abs(st.matrix().trace().real() - 1.0) < 1e-12);
            CHECK(linalg::hermitian_eigenvalues(st.matrix()).minCoeff() > -1e-8);
        }
    }

    SUBCASE("photon number gap decays at Gamma_r") {
        const auto free_gen = generator_from_rates(0.0, 0.35, 1.0e6, 40);
        const auto ss_n = 0.35;
        const std::array<double, 2> times{1.0 / free_gen.gamma_r(),
                                          2.0 / free_gen.gamma_r()};
        const auto out = evolve(free_gen, fock::thermal_state(0.0, 40), times);
        const double gap0 = ss_n;
        const double gap1 = ss_n - mean_n(out[0]);
        const double gap2 = ss_n - mean_n(out[1]);
        CHECK(gap1 / gap0 == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
        CHECK(gap2 / gap1 == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
    }

    SUBCASE("truncation-unsafe evolution fails loudly") {
        const auto tight = generator_from_rates({4e6, 0.0}, 0.2, 1.0e6, 8);
        const std::array<double, 1> t{10.0 / tight.gamma_r()};
        CHECK_THROWS_AS(evolve(tight, fock::thermal_state(0.0, 8), t),
                        TruncationUnsafeError);
    }
}

TEST_CASE("two-time correlation via quantum regression") {
    SUBCASE("thermal light: g2(0) = 2 decaying to 1 at rate Gamma_r") {
        const auto gen = generator_from_rates(0.0, 0.5, 1.0e6, 40);
        const auto ss = steady_state_numeric(gen);
        const std::array<double, 3> taus{0.0, 1.0 / gen.gamma_r(),
                                         8.0 / gen.gamma_r()};
        const auto g2 = g2_correlation(gen, ss, taus);
        CHECK(g2[0] == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(g2[1] == doctest::Approx(1.0 + std::exp(-1.0)).epsilon(1e-4));
        CHECK(g2[2] == doctest::Approx(1.0).epsilon(1e-3));
    }

    SUBCASE("coherent light stays at g2 = 1") {
        const auto gen = generator_from_rates({3e5, 0.0}, 1e-9, 1.0e6, 40);
        const auto ss = steady_state_numeric(gen);
        const std::array<double, 3> taus{0.0, 0.7 / gen.gamma_r(),
                                         3.0 / gen.gamma_r()};
        for (const double g2 : g2_correlation(gen, ss, taus))
            CHECK(g2 == doctest::Approx(1.0).epsilon(1e-5));
    }

    SUBCASE("matches the single-time statistics at tau = 0") {
        const auto p = reference_params(0.15, 0.9, two_pi * 0.2e6);
        const AtomEnsembleSpec spec{1.3, PhaseMode::Coherent};
        const auto gen = build_generator(p, spec, 50);
        const auto ss = steady_state_numeric(gen);
        const std::array<double, 1> tau0{0.0};
        CHECK(g2_correlation(gen, ss, tau0)[0] ==
              doctest::Approx(fock::photon_statistics(ss).g2_zero).epsilon(1e-9));
    }

    SUBCASE("empty cavity has no correlation function") {
        const auto gen = generator_from_rates(0.0, 0.0, 1.0e6, 10);
        const auto ss = steady_state_numeric(gen);
        const std::array<double, 1> tau0{0.0};
        CHECK_THROWS_AS(g2_correlation(gen, ss, tau0), std::domain_error);
    }
}

TEST_CASE("superradiant enhancement reproduces the 40-fold ratio") {
    auto p = reference_params(0.03, 2.1, two_pi * 0.5e6);
    const double theta = reservoir::calibrate_theta(p, 3200.0);
    const auto an = steady_state_analytic(p, {theta, PhaseMode::Coherent});
    const double ratio = an.n_total / an.n_th;
    CHECK(ratio > 30.0);
    CHECK(ratio < 50.0);
}
