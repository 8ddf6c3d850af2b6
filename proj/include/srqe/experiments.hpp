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

#include "srqe/config.hpp"

namespace srqe::cli {

// Runs the configured experiment, writing summary.json plus the
// experiment's CSV files into output_dir. Returns the summary path.
// All file writes happen on the calling thread in deterministic order.
std::string run_experiment(const RunConfig& config);

}  // namespace srqe::cli
