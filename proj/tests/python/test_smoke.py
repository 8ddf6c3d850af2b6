# Copyright 2026 The srqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

srqe = pytest.importorskip("_srqe")


def test_version():
    assert srqe.__version__


def test_annihilation_operator():
    a = np.asarray(srqe.annihilation_operator(4))
    assert a[2, 3] == pytest.approx(math.sqrt(3.0), rel=1e-12)
    assert a[0, 1] == pytest.approx(1.0, rel=1e-12)


def test_thermal_state_moments():
    rho = np.asarray(srqe.thermal_state(0.115, 30))
    n_mean, g2 = srqe.photon_statistics(rho)
    assert n_mean == pytest.approx(0.115, abs=1e-9)
    assert g2 == pytest.approx(2.0, abs=1e-6)


def test_entropy_invariance_under_displacement():
    rho = np.asarray(srqe.displaced_thermal_state(1.0 + 0.3j, 0.4, 60))
    assert srqe.von_neumann_entropy(rho) == pytest.approx(
        srqe.thermal_entropy(0.4), abs=1e-8
    )


def test_efficiency_formula():
    assert srqe.efficiency(0.05, 2.5) == pytest.approx(0.98, rel=1e-12)


def test_steady_state_routes_agree():
    p = srqe.CavityAtomParams(g_tau=0.17, n_bar=0.8, delta_ac_hz=0.5e6)
    theta = srqe.calibrate_theta(p, 8000.0)
    alpha, n_th, n_total = srqe.steady_state_analytic(p, theta, srqe.PhaseMode.Coherent)
    rho = np.asarray(srqe.steady_state_numeric(p, theta, srqe.PhaseMode.Coherent, 60))
    n_numeric, _ = srqe.photon_statistics(rho)
    assert n_numeric == pytest.approx(n_total, rel=1e-8)
    assert n_th + abs(alpha) ** 2 == pytest.approx(n_total, rel=1e-12)


def test_cycle_ledger():
    p = srqe.CavityAtomParams(g_tau=0.17, n_bar=0.8, delta_ac_hz=0.5e6)
    theta = srqe.calibrate_theta(p, 8000.0)
    schedule = srqe.CycleSchedule.from_detunings(
        p.omega_a, 2 * math.pi * 0.5e6, 2 * math.pi * 1.0e6
    )
    ledger = srqe.run_cycle(p, schedule, theta)
    assert ledger["W_out_J"] > 0.0
    assert ledger["first_law_residual"] < 1e-10
    assert ledger["eta"] == pytest.approx(1.0 - ledger["n_th"] / ledger["n_sr"], rel=1e-9)

    null = srqe.run_cycle(p, schedule, theta, thermal_only=True)
    assert abs(null["W_out_J"]) < 1e-9 * null["Q_in_J"]


def test_trajectories_reach_steady_state():
    p = srqe.CavityAtomParams(g_tau=0.03, n_bar=1.0, delta_ac_hz=0.0)
    theta = math.pi / 2
    d = srqe.derive_reservoir(p, theta, srqe.PhaseMode.Coherent)
    _, _, n_total = srqe.steady_state_analytic(p, theta, srqe.PhaseMode.Coherent)

    t_final = 22.0 / d.Gamma_r
    out = srqe.run_trajectories(
        p, theta, srqe.PhaseMode.Coherent, t_final,
        dim=30, n_trajectories=200, seed=7, sample_count=120, threads=4,
    )
    times = np.asarray(out["times"])
    means = np.asarray(out["n_mean"])
    tail = means[times > 17.0 / d.Gamma_r]
    assert np.mean(tail) == pytest.approx(n_total, rel=0.1)
