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

// Release acceptance suite: one line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <thread>

#include "srqe/checks.hpp"

int main() {
    const unsigned hw = std::thread::hardware_concurrency();
    const int threads = hw == 0 ? 1 : static_cast<int>(hw);

    const auto results = srqe::checks::run_acceptance_criteria(threads);
    int index = 0;
    bool ok = true;
    for (const auto& r : results) {
        ++index;
        std::printf("ACCEPTANCE %2d [%s] %s — %s\n", index, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("acceptance: %s\n", ok ? "all criteria passed" : "FAILURES PRESENT");
    return ok ? 0 : 1;
}
