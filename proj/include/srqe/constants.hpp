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

#include <numbers>

namespace srqe {

// SI defining constants (2019 redefinition; h and k_B are exact).
struct PhysicalConstants {
    static constexpr double h = 6.62607015e-34;                    // J s
    static constexpr double hbar = h / (2.0 * std::numbers::pi);   // J s
    static constexpr double k_B = 1.380649e-23;                    // J/K
    static constexpr double c = 2.99792458e8;                      // m/s
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace srqe
