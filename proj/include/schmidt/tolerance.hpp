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

namespace schmidt {

/// Thresholds that turn exact-arithmetic notions (rank, positivity, equality)
/// into floating-point decisions. All are relative to the scale of the input.
struct ToleranceConfig {
  double rel_rank_tol = 1e-10;
  double psd_tol = 1e-10;
  double recon_tol = 1e-10;

  /// Throws Error(InvalidArgument) unless every tolerance lies in (0, 1).
  void validate() const;

  /// The single-knob form used by the command line: rank and PSD thresholds
  /// both set to `tol`, reconstruction tolerance left at its default.
  static ToleranceConfig uniform(double tol);
};

}  // namespace schmidt
