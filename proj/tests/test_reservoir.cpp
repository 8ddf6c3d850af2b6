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

#include <doctest.h>

#include "srqe/constants.hpp"
#include "srqe/errors.hpp"
#include "srqe/reservoir.hpp"

using namespace srqe;
using namespace srqe::reservoir;

namespace {

CavityAtomParams params_with(double g_tau, double tau, double n_bar, double delta) {
    CavityAtomParams p;
    p.tau = tau;
    p.g = g_tau / tau;
    p.kappa = two_pi * 74e3;
    p.gamma_atom = two_pi * 25e3;
    p.omega_a = two_pi * PhysicalConstants::c / 791.3e-9;
    p.N_bar = n_bar;
    p.delta_ac = delta;
    return p;
}

}  // namespace

TEST_CASE("atom density matrix") {
    SUBCASE("theta = 0 is the excited state") {
        const auto rho = atom_density_matrix({0.0, PhaseMode::Coherent});
        CHECK(rho_ee(rho) == doctest::Approx(1.0));
        CHECK(std::abs(rho_eg(rho)) == doctest::Approx(0.0));
    }

    SUBCASE("theta = pi/2, coherent pump") {
        const auto rho =
            atom_density_matrix({std::numbers::pi / 2, PhaseMode::Coherent});
        CHECK(rho_ee(rho) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(rho_gg(rho) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(rho_eg(rho).real() == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("theta = pi/2, randomized pump dephases") {
        const auto rho =
            atom_density_matrix({std::numbers::pi / 2, PhaseMode::Randomized});
        CHECK(rho_ee(rho) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(rho_eg(rho)) == 0.0);
    }

    CHECK_THROWS_AS(atom_density_matrix({-0.1, PhaseMode::Coherent}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        atom_density_matrix({1.0, PhaseMode::Coherent, /*pump_detuning=*/1e5}),
        std::invalid_argument);
}

TEST_CASE("injection rate") {
    CHECK(injection_rate(params_with(0.1, 1e-7, 0.0, 0.0)) == 0.0);

    // tau from g*tau = 0.17 at the quoted maximum coupling
    const double tau_a = 0.17 / (two_pi * 334e3);
    CHECK(tau_a == doctest::Approx(81e-9).epsilon(2e-3));
    CHECK(injection_rate(params_with(0.17, tau_a, 0.8, 0.0)) ==
          doctest::Approx(9.88e6).epsilon(1e-3));

    // tau from kappa*tau = 0.05
    const double tau_b = 0.05 / (two_pi * 74e3);
    CHECK(tau_b == doctest::Approx(107e-9).epsilon(6e-3));
    CHECK(injection_rate(params_with(0.17, tau_b, 2.1, 0.0)) ==
          doctest::Approx(1.96e7).epsilon(2e-3));
}

TEST_CASE("thermal photon number closed form") {
    SUBCASE("no excited population, no photons") {
        const auto p = params_with(0.1, 1.4e-7, 1.0, 0.0);
        const auto rho = atom_density_matrix({std::numbers::pi, PhaseMode::Randomized});
        CHECK(thermal_photon_number(p, rho) == 0.0);
    }

    SUBCASE("lossless cavity reduces to the Boltzmann form") {
        auto p = params_with(0.03, 1.4e-7, 1.0, 0.0);
        p.kappa = 0.0;  // direct closed-form evaluation, outside validate()
        const auto rho = atom_density_matrix({2.2, PhaseMode::Randomized});
        const double expected = rho_ee(rho) / (rho_gg(rho) - rho_ee(rho));
        CHECK(thermal_photon_number(p, rho) ==
              doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("reference numeric point") {
        // theta = pi/2, g*tau = 0.03, gamma_inj = 1e7/s, delta = 0
        auto p = params_with(0.03, 1e-7, 1.0, 0.0);  // gamma_inj = 1e7
        const auto rho =
            atom_density_matrix({std::numbers::pi / 2, PhaseMode::Randomized});
        const double expected = (0.5 * 1e7 * 9e-4) / (2.0 * two_pi * 74e3);
        CHECK(expected == doctest::Approx(4.84e-3).epsilon(2e-3));
        CHECK(thermal_photon_number(p, rho) ==
              doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("masing regime is rejected") {
        const auto p = params_with(0.4, 1.4e-7, 5.0, 0.0);
        const auto rho = atom_density_matrix({0.1, PhaseMode::Randomized});
        CHECK_THROWS_AS(thermal_photon_number(p, rho), GainExceedsLossError);
    }

    SUBCASE("monotone in rho_ee and in the injection rate") {
        double prev = -1.0;
        for (const double theta : {2.8, 2.2, 1.6, 1.0}) {
            const auto p = params_with(0.05, 1.4e-7, 1.0, 0.0);
            const double n = thermal_photon_number(
                p, atom_density_matrix({theta, PhaseMode::Randomized}));
            CHECK(n > prev);
            prev = n;
        }
        prev = -1.0;
        for (const double n_bar : {0.3, 0.8, 1.5, 2.4}) {
            const auto p = params_with(0.05, 1.4e-7, n_bar, 0.0);
            const double n = thermal_photon_number(
                p, atom_density_matrix({1.8, PhaseMode::Randomized}));
            CHECK(n > prev);
            prev = n;
        }
    }
}

TEST_CASE("reservoir rate") {
    const double two_kappa = 2.0 * two_pi * 74e3;

    SUBCASE("no atoms leaves the bare cavity decay") {
        const auto p = params_with(0.1, 1.4e-7, 0.0, 0.0);
        CHECK(reservoir_rate(p, atom_density_matrix({1.0, PhaseMode::Randomized})) ==
              doctest::Approx(two_kappa).epsilon(1e-14));
    }

    SUBCASE("balanced populations cancel the atomic term") {
        const auto p = params_with(0.12, 1.4e-7, 1.7, 0.0);
        CHECK(reservoir_rate(
                  p, atom_density_matrix({std::numbers::pi / 2, PhaseMode::Coherent})) ==
              doctest::Approx(two_kappa).epsilon(1e-14));
    }

    SUBCASE("reference numeric point at theta = 2 pi/3") {
        // gamma_inj = 9.88e6/s, g*tau = 0.17, rho_ee = 1/4
        auto p = params_with(0.17, 0.8 / 9.88e6, 0.8, 0.0);
        const auto rho =
            atom_density_matrix({2.0 * std::numbers::pi / 3.0, PhaseMode::Randomized});
        CHECK(rho_ee(rho) == doctest::Approx(0.25).epsilon(1e-12));
        const double expected = two_kappa + 0.5 * 9.88e6 * 0.0289;
        CHECK(expected == doctest::Approx(1.0727e6).epsilon(1e-3));
        CHECK(reservoir_rate(p, rho) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("drive amplitude") {
    SUBCASE("randomized pump drives nothing") {
        const auto p = params_with(0.17, 1.39e-7, 0.8, two_pi * 0.5e6);
        CHECK(std::abs(drive_amplitude(
                  p, atom_density_matrix({1.3, PhaseMode::Randomized}))) == 0.0);
    }

    SUBCASE("resonant balanced pump") {
        const auto p = params_with(0.17, 1.39e-7, 0.8, 0.0);
        const auto lambda = drive_amplitude(
            p, atom_density_matrix({std::numbers::pi / 2, PhaseMode::Coherent}));
        CHECK(lambda.imag() == doctest::Approx(0.0));
        CHECK(lambda.real() ==
              doctest::Approx(injection_rate(p) * 0.17 / 2.0).epsilon(1e-12));
    }

    SUBCASE("sinc null at delta tau = pi, printed convention") {
        auto p = params_with(0.17, 1.39e-7, 0.8, std::numbers::pi / 1.39e-7);
        const auto rho = atom_density_matrix({1.0, PhaseMode::Coherent});
        CHECK(std::abs(drive_amplitude(p, rho)) < 1e-9 * injection_rate(p));

        p.drive_sinc = DriveSinc::HalfArgument;
        // the alternate convention keeps the drive finite there
        CHECK(std::abs(drive_amplitude(p, rho)) >
              0.1 * injection_rate(p) * 0.17 * std::abs(rho_eg(rho)));
    }
}

TEST_CASE("reservoir temperature") {
    const double omega_a = two_pi * PhysicalConstants::c / 791.3e-9;

    SUBCASE("quoted occupation reproduces 8000 K") {
        CHECK(reservoir_temperature_from_n(omega_a, 0.1148) ==
              doctest::Approx(8000.0).epsilon(1e-3));
    }

    SUBCASE("monotone and divergent with occupation") {
        double prev = 0.0;
        for (const double n : {0.01, 0.1, 1.0, 10.0, 1e4}) {
            const double t = reservoir_temperature_from_n(omega_a, n);
            CHECK(t > prev);
            prev = t;
        }
        CHECK(prev > 1e7);
    }

    SUBCASE("zero occupation maps to zero temperature") {
        CHECK(reservoir_temperature_from_n(omega_a, 0.0) == 0.0);
    }

    SUBCASE("occupation round trip") {
        for (const double t : {3200.0, 3800.0, 8000.0}) {
            const double n = bose_einstein_occupation(omega_a, t);
            CHECK(reservoir_temperature_from_n(omega_a, n) ==
                  doctest::Approx(t).epsilon(1e-12));
        }
    }
}

TEST_CASE("atoms per decay time") {
    auto p = params_with(0.17, 0.05 / (two_pi * 74e3), 2.1, 0.0);
    CHECK(atoms_per_decay_time(p) == doctest::Approx(42.0).epsilon(1e-12));

    p.N_bar = 0.0;
    CHECK(atoms_per_decay_time(p) == 0.0);

    p.N_bar = 1.0;
    p.tau = 107e-9;
    CHECK(atoms_per_decay_time(p) == doctest::Approx(20.1).epsilon(1e-2));
}

TEST_CASE("theta calibration") {
    const auto p = params_with(0.03, 1.39e-7, 2.1, two_pi * 0.5e6);

    SUBCASE("round trip against the target temperature") {
        for (const double target : {3200.0, 3800.0, 8000.0}) {
            const double theta = calibrate_theta(p, target);
            const auto d = derive(p, {theta, PhaseMode::Randomized});
            CHECK(d.T_R == doctest::Approx(target).epsilon(1e-6));
        }
    }

    SUBCASE("unreachable target throws") {
        const auto weak = params_with(0.03, 1.39e-7, 0.05, two_pi * 0.5e6);
        CHECK_THROWS_AS(calibrate_theta(weak, 8000.0), std::domain_error);
    }

    SUBCASE("temperature is phase-mode independent") {
        const double theta = calibrate_theta(p, 3200.0);
        const auto coh = derive(p, {theta, PhaseMode::Coherent});
        const auto rnd = derive(p, {theta, PhaseMode::Randomized});
        CHECK(coh.T_R == doctest::Approx(rnd.T_R).epsilon(1e-14));
        CHECK(coh.n_th == doctest::Approx(rnd.n_th).epsilon(1e-14));
    }
}

TEST_CASE("superradiant occupation grows quadratically with injection") {
    // kappa-dominated regime, fixed theta
    const double theta = 1.9;
    double prev_excess = 0.0, prev_gamma = 0.0;
    std::vector<double> slopes;
    for (const double n_bar : {0.1, 0.2, 0.4}) {
        const auto p = params_with(0.02, 1.39e-7, n_bar, 0.0);
        const auto d = derive(p, {theta, PhaseMode::Coherent});
        const double excess = std::norm(2.0 * d.lambda_drive / d.Gamma_r);
        if (prev_excess > 0.0)
            slopes.push_back(std::log(excess / prev_excess) /
                             std::log(d.gamma_inj / prev_gamma));
        prev_excess = excess;
        prev_gamma = d.gamma_inj;
    }
    for (const double s : slopes) CHECK(s == doctest::Approx(2.0).epsilon(5e-3));
}

TEST_CASE("parameter validation and warnings") {
    auto p = params_with(0.17, 1.39e-7, 0.8, 0.0);
    CHECK_FALSE(p.markov_warning());
    CHECK(p.warnings().empty());

    p.g = 0.35 / p.tau;
    CHECK(p.markov_warning());
    CHECK(p.warnings().size() == 1);

    p.kappa = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
