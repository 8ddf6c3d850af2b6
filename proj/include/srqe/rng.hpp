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

#include <cmath>
#include <cstdint>
#include <numbers>

namespace srqe {

// Counter-based stream: output k is a pure function of (key, k), so streams
// keyed by (seed, trajectory_index) are reproducible under any execution
// order. Mixing is the splitmix64 finalizer over a Weyl sequence.
class CounterRng {
  public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed + kGamma) ^ mix(stream * kGamma + 0x5851F42D4C957F2DULL)) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log argument.
    double uniform01_open_low() { return 1.0 - uniform01(); }

    double exponential(double rate) { return -std::log(uniform01_open_low()) / rate; }

    double uniform_angle() { return two_pi_ * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    std::uint64_t draws() const { return counter_; }

  private:
    static constexpr double two_pi_ = 2.0 * std::numbers::pi;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace srqe
