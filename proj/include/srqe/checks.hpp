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

#include <string>
#include <vector>

namespace srqe::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Quick module-invariant battery (seconds).
std::vector<CheckResult> run_invariant_suite();

// The ten release criteria, one result each (minutes; trajectory-heavy).
std::vector<CheckResult> run_acceptance_criteria(int threads);

// Invariants plus acceptance; the full release gate.
std::vector<CheckResult> run_selfcheck(int threads);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace srqe::checks
