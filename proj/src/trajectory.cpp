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

#include "srqe/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "srqe/errors.hpp"

namespace srqe::traj {

namespace {

using linalg::Complex;

struct Block2 {
    Complex uee, ueg, uge, ugg;
};

// exp(-i tau [(delta/2) sigma_z + g sqrt(n+1) sigma_x]) with the common
// phase exp(-i delta tau / 2), in the {|e,n>, |g,n+1>} pair basis.
Block2 jc_block(double g, double delta, double tau, int n) {
    const double half_delta = 0.5 * delta;
    const double coupling = g * std::sqrt(static_cast<double>(n + 1));
    const double omega = std::hypot(half_delta, coupling);
    const Complex phase = std::exp(Complex(0.0, -half_delta * tau));

    if (omega == 0.0) return {phase, 0.0, 0.0, phase};

    const double c = std::cos(omega * tau);
    const double s = std::sin(omega * tau);
    const double nz = half_delta / omega;
    const double nx = coupling / omega;

    Block2 b;
    b.uee = phase * Complex(c, -s * nz);
    b.ugg = phase * Complex(c, s * nz);
    b.ueg = phase * Complex(0.0, -s * nx);
    b.uge = b.ueg;
    return b;
}

}  // namespace

void TrajectoryConfig::validate() const {
    params.validate();
    spec.validate();
    if (t_final < 0.0) throw std::invalid_argument("TrajectoryConfig: t_final must be >= 0");
    if (dim < 2) throw std::invalid_argument("TrajectoryConfig: dim must be >= 2");
    if (n_trajectories < 1)
        throw std::invalid_argument("TrajectoryConfig: n_trajectories must be >= 1");
    if (sample_count < 2)
        throw std::invalid_argument("TrajectoryConfig: sample_count must be >= 2");
}

std::vector<double> sample_arrivals(double gamma_inj, double t_final, CounterRng& rng) {
    if (gamma_inj < 0.0)
        throw std::invalid_argument("sample_arrivals: gamma_inj must be >= 0");
    std::vector<double> arrivals;
    if (gamma_inj == 0.0 || t_final <= 0.0) return arrivals;
    double t = rng.exponential(gamma_inj);
    while (t < t_final) {
        arrivals.push_back(t);
        t += rng.exponential(gamma_inj);
    }
    return arrivals;
}

linalg::Matrix jc_propagator(double g, double delta_ac, double tau, int dim) {
    if (dim < 2) throw std::invalid_argument("jc_propagator: dim must be >= 2");
    const int joint = 2 * dim;
    linalg::Matrix u = linalg::Matrix::Zero(joint, joint);

    const auto g_idx = [dim](int n) { return n; };
    const auto e_idx = [dim](int n) { return dim + n; };

    u(g_idx(0), g_idx(0)) = 1.0;  // |g,0> is decoupled
    for (int n = 0; n + 1 < dim; ++n) {
        const Block2 b = jc_block(g, delta_ac, tau, n);
        u(e_idx(n), e_idx(n)) = b.uee;
        u(e_idx(n), g_idx(n + 1)) = b.ueg;
        u(g_idx(n + 1), e_idx(n)) = b.uge;
        u(g_idx(n + 1), g_idx(n + 1)) = b.ugg;
    }
    // |e, dim-1> has no partner on the truncated space; only the detuning
    // phase acts there.
    u(e_idx(dim - 1), e_idx(dim - 1)) = std::exp(Complex(0.0, -delta_ac * tau));
    return u;
}

namespace {

// Single-trajectory state machine. The pure state evolves under exact
// non-Hermitian decay exp(-kappa a†a t) between events; jump times are
// sampled by inverting the survival function, which is a finite sum of
// exponentials in the Fock populations.
class TrajectoryRunner {
  public:
    TrajectoryRunner(const TrajectoryConfig& cfg, int index)
        : cfg_(cfg), rng_(cfg.seed, static_cast<std::uint64_t>(index)) {
        psi_ = Eigen::VectorXcd::Zero(cfg.dim);
        psi_(0) = 1.0;  // initial vacuum
        const int ns = cfg.sample_count;
        sample_times_.resize(ns);
        for (int i = 0; i < ns; ++i)
            sample_times_[i] = cfg.t_final * static_cast<double>(i) / (ns - 1);
        blocks_.reserve(cfg.dim - 1);
        for (int n = 0; n + 1 < cfg.dim; ++n)
            blocks_.push_back(
                jc_block(cfg.params.g, cfg.params.delta_ac, cfg.params.tau, n));
        top_phase_ = std::exp(Complex(0.0, -cfg.params.delta_ac * cfg.params.tau));
    }

    EmissionRecord run() {
        const double gamma_inj = reservoir::injection_rate(cfg_.params);
        record_.atom_arrival_times = sample_arrivals(gamma_inj, cfg_.t_final, rng_);

        // Each transit spans [t_k, t_k + tau] in wall time with the full-tau
        // kick applied at the window center (Strang splitting of the decay).
        // Overlapping windows keep their ordered kicks; the interactions are
        // never joined.
        const double tau = cfg_.params.tau;
        for (const double t_k : record_.atom_arrival_times) {
            const double kick_time = t_k + 0.5 * tau;
            if (kick_time > t_) decay_for(kick_time - t_);
            atom_transit();
        }
        if (t_ < cfg_.t_final) decay_for(cfg_.t_final - t_);
        flush_samples();
        return std::move(record_);
    }

  private:
    // S(t) = sum_n w_n q^n with q = exp(-2 kappa t); one exp, then powers.
    double survival(const std::vector<double>& w, double t) const {
        const double q = std::exp(-2.0 * cfg_.params.kappa * t);
        double s = 0.0, qn = 1.0;
        for (int n = 0; n < cfg_.dim; ++n) {
            s += w[n] * qn;
            qn *= q;
        }
        return s;
    }

    double mean_n_decayed(const std::vector<double>& w, double t) const {
        const double q = std::exp(-2.0 * cfg_.params.kappa * t);
        double s = 0.0, sn = 0.0, qn = 1.0;
        for (int n = 0; n < cfg_.dim; ++n) {
            const double p = w[n] * qn;
            s += p;
            sn += n * p;
            qn *= q;
        }
        return sn / s;
    }

    void populations(std::vector<double>& w) const {
        w.resize(cfg_.dim);
        for (int n = 0; n < cfg_.dim; ++n) w[n] = std::norm(psi_(n));
    }

    void apply_decay_and_normalize(double t) {
        const double q = std::exp(-cfg_.params.kappa * t);
        double qn = 1.0;
        for (int n = 0; n < cfg_.dim; ++n) {
            psi_(n) *= qn;
            qn *= q;
        }
        psi_.normalize();
    }

    void apply_jump() {
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(cfg_.dim);
        for (int n = 1; n < cfg_.dim; ++n)
            next(n - 1) = std::sqrt(static_cast<double>(n)) * psi_(n);
        const double norm = next.norm();
        if (norm == 0.0)
            throw std::runtime_error("trajectory: jump from vacuum state");
        psi_ = next / norm;
    }

    void emit_samples(const std::vector<double>& w, double stretch) {
        while (next_sample_ < sample_times_.size() &&
               sample_times_[next_sample_] <= t_ + stretch) {
            const double dt = sample_times_[next_sample_] - t_;
            record_.sampled_n.emplace_back(sample_times_[next_sample_],
                                           mean_n_decayed(w, std::max(dt, 0.0)));
            ++next_sample_;
        }
    }

    void flush_samples() {
        std::vector<double> w;
        populations(w);
        emit_samples(w, 0.0);
    }

    void decay_for(double duration) {
        double remaining = duration;
        while (remaining > 0.0) {
            std::vector<double>& w = scratch_w_;
            populations(w);

            const double r = rng_.uniform01_open_low();
            const double s_end = survival(w, remaining);
            double stretch = remaining;
            bool jump = false;
            if (r > s_end) {
                // Invert S(t) = r by bisection; S is strictly decreasing.
                double lo = 0.0, hi = remaining;
                for (int i = 0; i < 80; ++i) {
                    const double mid = 0.5 * (lo + hi);
                    (survival(w, mid) > r ? lo : hi) = mid;
                }
                stretch = 0.5 * (lo + hi);
                jump = true;
            }

            emit_samples(w, stretch);
            apply_decay_and_normalize(stretch);
            t_ += stretch;
            remaining -= stretch;
            if (jump) {
                apply_jump();
                if (cfg_.record_emissions) record_.jump_times.push_back(t_);
            }
        }
    }

    void atom_transit() {
        const double theta = cfg_.spec.theta;
        double phi = 0.0;
        if (cfg_.spec.phase_mode == reservoir::PhaseMode::Randomized)
            phi = rng_.uniform_angle();
        const Complex amp_g(std::sin(0.5 * theta), 0.0);
        const Complex amp_e = std::cos(0.5 * theta) * std::exp(Complex(0.0, -phi));

        const int d = cfg_.dim;
        // Propagate the {|e,n>, |g,n+1>} pairs; |g,0> and the truncated top
        // level evolve by phases only.
        Eigen::VectorXcd& out_g = scratch_g_;
        Eigen::VectorXcd& out_e = scratch_e_;
        out_g.resize(d);
        out_e.resize(d);
        out_g(0) = amp_g * psi_(0);
        for (int n = 0; n + 1 < d; ++n) {
            const Block2& b = blocks_[n];
            const Complex be = amp_e * psi_(n);
            const Complex bg = amp_g * psi_(n + 1);
            out_e(n) = b.uee * be + b.ueg * bg;
            out_g(n + 1) = b.uge * be + b.ugg * bg;
        }
        out_e(d - 1) = top_phase_ * amp_e * psi_(d - 1);

        const double p_e = out_e.squaredNorm();
        if (rng_.bernoulli(p_e)) {
            psi_ = out_e / std::sqrt(p_e);
            ++record_.atoms_measured_excited;
        } else {
            psi_ = out_g / out_g.norm();
        }

        if (std::norm(psi_(d - 1)) >= fock::kTruncationTolerance * 10.0)
            truncation_stress_ = true;
    }

  public:
    bool truncation_stressed() const { return truncation_stress_; }

  private:
    const TrajectoryConfig& cfg_;
    CounterRng rng_;
    Eigen::VectorXcd psi_;
    EmissionRecord record_;
    std::vector<double> sample_times_;
    std::vector<Block2> blocks_;
    Complex top_phase_;
    std::vector<double> scratch_w_;
    Eigen::VectorXcd scratch_g_, scratch_e_;
    std::size_t next_sample_ = 0;
    double t_ = 0.0;
    bool truncation_stress_ = false;
};

}  // namespace

EmissionRecord run_trajectory(const TrajectoryConfig& config, int trajectory_index) {
    config.validate();
    TrajectoryRunner runner(config, trajectory_index);
    return runner.run();
}

std::vector<EmissionRecord> run_ensemble(const TrajectoryConfig& config, int threads) {
    config.validate();
    const int n = config.n_trajectories;
    std::vector<EmissionRecord> records(n);

    const int workers = std::clamp(threads, 1, n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i) records[i] = run_trajectory(config, i);
        return records;
    }

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers)
                records[i] = run_trajectory(config, i);
        });
    }
    for (auto& t : pool) t.join();
    return records;
}

EnsembleStatistics ensemble_statistics(std::span<const EmissionRecord> records) {
    if (records.size() < 2)
        throw std::invalid_argument("ensemble_statistics: need at least 2 records");
    const std::size_t npts = records[0].sampled_n.size();
    for (const auto& r : records)
        if (r.sampled_n.size() != npts)
            throw std::invalid_argument("ensemble_statistics: records share no common grid");

    EnsembleStatistics out;
    out.times.resize(npts);
    out.mean.assign(npts, 0.0);
    out.standard_error.assign(npts, 0.0);
    const double m = static_cast<double>(records.size());

    for (std::size_t i = 0; i < npts; ++i) {
        out.times[i] = records[0].sampled_n[i].first;
        double sum = 0.0, sum2 = 0.0;
        for (const auto& r : records) {
            const double v = r.sampled_n[i].second;
            sum += v;
            sum2 += v * v;
        }
        const double mean = sum / m;
        const double var = std::max(0.0, (sum2 - m * mean * mean) / (m - 1.0));
        out.mean[i] = mean;
        out.standard_error[i] = std::sqrt(var / m);
    }
    return out;
}

std::pair<double, double> window_average(std::span<const EmissionRecord> records,
                                         double t_start, double t_end) {
    if (records.size() < 2)
        throw std::invalid_argument("window_average: need at least 2 records");
    double sum = 0.0, sum2 = 0.0;
    for (const auto& r : records) {
        double acc = 0.0;
        int count = 0;
        for (const auto& [t, v] : r.sampled_n) {
            if (t >= t_start && t <= t_end) {
                acc += v;
                ++count;
            }
        }
        if (count == 0)
            throw std::invalid_argument("window_average: empty sampling window");
        const double avg = acc / count;
        sum += avg;
        sum2 += avg * avg;
    }
    const double m = static_cast<double>(records.size());
    const double mean = sum / m;
    const double var = std::max(0.0, (sum2 - m * mean * mean) / (m - 1.0));
    return {mean, std::sqrt(var / m)};
}

G2Histogram g2_from_records(std::span<const EmissionRecord> records,
                            double bin_width, double max_lag, double burn_in,
                            std::size_t min_pairs) {
    if (bin_width <= 0.0 || max_lag <= bin_width)
        throw std::invalid_argument("g2_from_records: need 0 < bin_width < max_lag");

    const int nbins = static_cast<int>(std::floor(max_lag / bin_width));
    std::vector<double> counts(nbins, 0.0);
    std::vector<double> expected(nbins, 0.0);
    std::size_t total_events = 0;

    for (const auto& rec : records) {
        std::vector<double> ev;
        for (const double t : rec.jump_times)
            if (t >= burn_in) ev.push_back(t);
        if (ev.size() < 2) continue;

        double t_end = ev.back();
        if (!rec.sampled_n.empty())
            t_end = std::max(t_end, rec.sampled_n.back().first);
        const double t_obs = t_end - burn_in;
        if (t_obs <= max_lag) continue;

        total_events += ev.size();
        const double rate = static_cast<double>(ev.size()) / t_obs;

        for (std::size_t i = 0; i < ev.size(); ++i) {
            for (std::size_t j = i + 1; j < ev.size(); ++j) {
                const double lag = ev[j] - ev[i];
                if (lag >= max_lag) break;
                counts[static_cast<int>(lag / bin_width)] += 1.0;
            }
        }
        for (int b = 0; b < nbins; ++b) {
            const double tau_b = (b + 0.5) * bin_width;
            expected[b] += rate * rate * (t_obs - tau_b) * bin_width;
        }
    }

    double total_pairs = 0.0;
    for (const double c : counts) total_pairs += c;
    if (total_pairs < static_cast<double>(min_pairs))
        throw std::runtime_error("g2_from_records: too few events for requested binning");

    G2Histogram hist;
    hist.total_events = total_events;
    hist.tau.resize(nbins);
    hist.g2.resize(nbins);
    hist.standard_error.resize(nbins);
    for (int b = 0; b < nbins; ++b) {
        hist.tau[b] = (b + 0.5) * bin_width;
        hist.g2[b] = expected[b] > 0.0 ? counts[b] / expected[b] : 0.0;
        hist.standard_error[b] =
            expected[b] > 0.0 ? std::sqrt(std::max(counts[b], 1.0)) / expected[b] : 0.0;
    }
    return hist;
}

double transit_overlap_fraction(const EmissionRecord& record, double tau) {
    const auto& t = record.atom_arrival_times;
    if (t.size() < 2) return 0.0;
    std::size_t overlapping = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i + 1] < t[i] + tau) ++overlapping;
    return static_cast<double>(overlapping) / static_cast<double>(t.size() - 1);
}

std::optional<std::string> validity_warning(const TrajectoryConfig& config,
                                            std::span<const EmissionRecord> records) {
    if (records.empty()) return std::nullopt;
    double acc = 0.0;
    for (const auto& r : records)
        acc += transit_overlap_fraction(r, config.params.tau);
    const double frac = acc / static_cast<double>(records.size());
    const double stress = config.params.N_bar * config.params.g * config.params.tau;
    if (frac > 0.5 && stress > 0.3)
        return "sequential-atom approximation stressed: " +
               std::to_string(100.0 * frac) +
               "% of transit windows overlap and N_bar*g*tau > 0.3";
    return std::nullopt;
}

}  // namespace srqe::traj
