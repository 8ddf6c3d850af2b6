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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srqe/fock.hpp"
#include "srqe/reservoir.hpp"
#include "srqe/rng.hpp"

namespace srqe::traj {

struct TrajectoryConfig {
    reservoir::CavityAtomParams params;
    reservoir::AtomEnsembleSpec spec;
    double t_final = 0.0;
    int dim = 30;
    int n_trajectories = 1;
    std::uint64_t seed = 0;
    bool record_emissions = false;
    int sample_count = 200;

    void validate() const;
};

struct EmissionRecord {
    std::vector<double> jump_times;          // cavity photodetection events
    std::vector<double> atom_arrival_times;  // t_k of the injected atoms
    std::vector<std::pair<double, double>> sampled_n;  // (t, <a†a>)
    int atoms_measured_excited = 0;
};

// Exponential inter-arrival times with mean 1/gamma_inj on [0, t_final).
std::vector<double> sample_arrivals(double gamma_inj, double t_final, CounterRng& rng);

// exp(-i tau [delta_ac sigma_ee (x) 1 + g (sigma_+ (x) a + sigma_- (x) a†)])
// on the atom (x) field space; basis index = atom * dim + n with atom 0 = |g>.
linalg::Matrix jc_propagator(double g, double delta_ac, double tau, int dim);

// Quantum-jump unraveling: non-Hermitian decay with jump operator
// sqrt(2 kappa) a between events, Jaynes-Cummings transit for each arriving
// atom (decay split in half-windows around the kick), projective atom
// measurement afterwards. Deterministic per (seed, trajectory_index).
EmissionRecord run_trajectory(const TrajectoryConfig& config, int trajectory_index);

std::vector<EmissionRecord> run_ensemble(const TrajectoryConfig& config,
                                         int threads = 1);

struct EnsembleStatistics {
    std::vector<double> times;
    std::vector<double> mean;
    std::vector<double> standard_error;
};

// Pointwise sample mean and standard error of <a†a> across records, which
// must share one sampling grid. Requires >= 2 records.
EnsembleStatistics ensemble_statistics(std::span<const EmissionRecord> records);

// Mean and standard error of the per-trajectory time averages over
// [t_start, t_end]; the estimator for steady-state comparisons.
std::pair<double, double> window_average(std::span<const EmissionRecord> records,
                                         double t_start, double t_end);

struct G2Histogram {
    std::vector<double> tau;      // bin centers
    std::vector<double> g2;
    std::vector<double> standard_error;
    std::size_t total_events = 0;
};

// Normalized coincidence histogram of jump-time pairs after burn_in, binned
// to bin_width up to max_lag. Throws when fewer than min_pairs pairs land in
// the histogram.
G2Histogram g2_from_records(std::span<const EmissionRecord> records,
                            double bin_width, double max_lag, double burn_in,
                            std::size_t min_pairs = 100);

// Fraction of arrivals whose transit window overlaps the next arrival.
double transit_overlap_fraction(const EmissionRecord& record, double tau);

// One-atom-at-a-time validity guard; non-empty when the sequential
// approximation is stressed.
std::optional<std::string> validity_warning(const TrajectoryConfig& config,
                                            std::span<const EmissionRecord> records);

}  // namespace srqe::traj
