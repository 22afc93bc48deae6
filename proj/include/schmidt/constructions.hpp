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
#include <optional>
#include <string>
#include <vector>

#include "schmidt/statespace.hpp"

namespace schmidt {

/// Parameters of Id + F + eps * v v^dagger with v = sum_i a_i (x) b_i.
struct FamilyParams {
  Index k = 2;
  Index n = 1;
  std::vector<Vector> a_vectors;
  std::vector<Vector> b_vectors;
  double epsilon = 1.0;

  /// Size, positivity and linear-independence checks. Throws
  /// InvalidArgument or DependentVectors.
  void validate(const ToleranceConfig& cfg) const;

  /// a_i = e_i, b_i = e_{n+i}.
  static FamilyParams canonical(Index k, Index n, double epsilon = 1.0);

  /// Complex Gaussian a_i, b_i from `seed`.
  static FamilyParams random(Index k, Index n, std::uint64_t seed,
                             double epsilon = 1.0);
};

/// v = sum_i a_i (x) b_i
PureVector family_vector(const FamilyParams& p, const ToleranceConfig& cfg);

BipartiteState family_state(const FamilyParams& p, const ToleranceConfig& cfg);

/// a = sum_i a_i (x) b_i - b_i (x) a_i, which spans the image of g_A.
PureVector antisym_vector(const FamilyParams& p, const ToleranceConfig& cfg);

/// Largest power-of-two fraction of 1/(2 |lambda_min((v v^dagger)^T_B)|)
/// (or 1 when that operator is PSD) for which (Id + F)^T_B + eps (v v^dagger)^T_B
/// verifies PSD. Throws ZeroVector, NonSquareFactors, EpsilonSearchFailed.
double auto_epsilon(const PureVector& v, const ToleranceConfig& cfg);

struct ProductTerm {
  double weight = 1.0;
  Vector left;
  Vector right;
};

/// Nonnegative combination sum_t w_t (l_t (x) r_t)(l_t (x) r_t)^dagger.
struct ProductDecomposition {
  Dims dims;
  std::string target_label;
  std::vector<ProductTerm> terms;

  Matrix reconstruct() const;
};

inline constexpr Index kMaxPhaseEnumerationDim = 8;

/// Id + F as an average over the 4^k phase vectors sum_j c_j e_j with
/// c_j in {1, i, -1, -i}, plus the k diagonal terms e_j (x) e_j.
/// Throws DimensionTooLarge for k > 8.
ProductDecomposition sym_separable_decomposition(Index k);

struct PureTerm {
  double weight = 1.0;
  PureVector vector;
};

/// A decomposition sum_t w_t x_t x_t^dagger of a state; its largest Schmidt
/// rank is an upper bound on the Schmidt number.
struct SchmidtNumberWitness {
  Index value = 1;
  double reconstruction_error = 0.0;
  std::size_t product_terms = 0;
  std::vector<PureTerm> entangled_terms;
};

/// Upper certificate for family_state(p): the Id + F product decomposition
/// plus sqrt(eps) v. Throws DimensionTooLarge for k > 8 and
/// ReconstructionFailed if the sum misses the state by more than recon_tol.
SchmidtNumberWitness sn_upper_certificate(const FamilyParams& p,
                                          const ToleranceConfig& cfg);

/// ||approx - target||_F / max(||target||_F, tiny)
double relative_error(const Matrix& approx, const Matrix& target);

/// sum_{i<target_sr} s_i x_i (x) y_i, orthonormal x_i, y_i, s_i in (0.1, 1].
PureVector random_pure(Index k, Index m, Index target_sr, std::uint64_t seed);

/// sum_t s_t (a_t (x) b_t)(a_t (x) b_t)^dagger for unit a_t, b_t and
/// s_t in (0.1, 1].
BipartiteState random_separable(Index k, Index m, Index num_terms,
                                std::uint64_t seed);

/// G G^dagger for a (km) x rank complex Gaussian G.
BipartiteState random_density(Index k, Index m, Index rank,
                              std::uint64_t seed);

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t z) noexcept;

/// Per-trial seed: splitmix64(master + (trial + 1) * 0x9E3779B97F4A7C15),
/// i.e. the (trial+1)-th output of a SplitMix64 stream started at `master`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept;

}  // namespace schmidt
