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

#include <sstream>

#include "schmidt/error.hpp"
#include "schmidt/tolerance.hpp"

namespace schmidt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSquareFactors: return "NonSquareFactors";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DependentVectors: return "DependentVectors";
    case ErrorCode::EpsilonSearchFailed: return "EpsilonSearchFailed";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

void ToleranceConfig::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) {
      std::ostringstream msg;
      msg << name << " must lie in (0, 1), got " << v;
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
  };
  check(rel_rank_tol, "rel_rank_tol");
  check(psd_tol, "psd_tol");
  check(recon_tol, "recon_tol");
}

ToleranceConfig ToleranceConfig::uniform(double tol) {
  ToleranceConfig cfg;
  cfg.rel_rank_tol = tol;
  cfg.psd_tol = tol;
  cfg.validate();
  return cfg;
}

}  // namespace schmidt
