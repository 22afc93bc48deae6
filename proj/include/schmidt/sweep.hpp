// Copyright 2026 The schmidt-bounds Authors.
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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/statespace.hpp"

namespace schmidt {

enum class Ensemble { Separable, Pure, Density };

std::string_view to_string(Ensemble e) noexcept;
/// Throws InvalidArgument on an unknown name.
Ensemble parse_ensemble(std::string_view name);

struct SweepConfig {
  Ensemble ensemble = Ensemble::Separable;
  Index k = 2;
  Index m = 2;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  ToleranceConfig tol;
};

/// Pass/violation counts for one inequality. `guaranteed` marks checks that
/// hold on every member of the ensemble, so a violation is a bug.
struct CheckTally {
  std::string name;
  bool guaranteed = false;
  std::int64_t passed = 0;
  std::int64_t violated = 0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<CheckTally> checks;
  std::map<std::string, std::map<Index, std::int64_t>> histograms;

  std::int64_t guaranteed_violations() const;
};

/// Trial t draws everything from trial_seed(config.seed, t); results are
/// aggregated in trial order, so they do not depend on config.jobs.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace schmidt
