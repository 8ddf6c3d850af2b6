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

#include <stdexcept>
#include <string>

namespace srqe {

// Atomic gain exceeds cavity loss: the linear reservoir model has no steady
// state (masing regime).
struct GainExceedsLossError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The vectorized generator has a null space of dimension != 1.
struct DegenerateSteadyStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state left the safe region of the truncated Fock space.
struct TruncationUnsafeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepSizeUnderflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n_sr < n_th: the cycle would consume work.
struct NegativeWorkRegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndefinedTemperatureError : std::domain_error {
    using std::domain_error::domain_error;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace srqe
