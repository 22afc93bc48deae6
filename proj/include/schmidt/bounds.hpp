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
#include <string_view>
#include <vector>

#include "schmidt/statespace.hpp"

namespace schmidt {

/// Which lower bound on the Schmidt number a certificate carries.
enum class BoundName {
  MarginalRank,       // ceil(max(rank L, rank R) / rank)
  SymMarginalRatio,   // ceil(rank((g_S)_L) / (2 rank g_S))
  AsymMarginalRatio,  // ceil(rank((g_A)_L) / (2 rank g_A))
  AsymHalving,        // ceil(SN-bound(g_A) / 2)
  SymHalving,         // ceil(SN-bound(g_S) / 2)
};

/// Serialized names: marginal_rank, sym_corollary, asym_corollary,
/// prop1_asym, prop1_sym.
std::string_view to_string(BoundName name) noexcept;

struct NamedCount {
  std::string name;
  std::int64_t value = 0;
};

struct BoundCertificate {
  BoundName name = BoundName::MarginalRank;
  std::int64_t value = 1;
  std::vector<NamedCount> inputs;
  bool degenerate = false;
  std::string formula_trace;

  /// Throws InvalidArgument if `key` is not among the inputs.
  std::int64_t input(std::string_view key) const;
};

/// Recomputes a certificate's value from its recorded inputs alone.
std::int64_t replay(const BoundCertificate& cert);

enum class DetectorName { Ppt, SqrtRank, SnBoundExceedsOne };
enum class Verdict { Entangled, Inconclusive };

std::string_view to_string(DetectorName name) noexcept;
std::string_view to_string(Verdict verdict) noexcept;

struct NamedValue {
  std::string name;
  double value = 0.0;
};

struct DetectorVerdict {
  DetectorName detector = DetectorName::Ppt;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<NamedValue> evidence;
};

/// Ranks of one of g_S / g_A and of its marginals. `pure_schmidt_rank` is set
/// when the part has rank one.
struct FlipPartRanks {
  Index rank = 0;
  Index marginal_left = 0;
  Index marginal_right = 0;
  std::optional<Index> pure_schmidt_rank;
};

struct RankProfile {
  Index gamma = 0;
  Index gamma_left = 0;
  Index gamma_right = 0;
  std::optional<FlipPartRanks> sym;   // square factors only
  std::optional<FlipPartRanks> asym;  // square factors only
};

struct BoundReport {
  Dims dims;
  RankProfile ranks;
  double pt_min_eigenvalue = 0.0;
  double pt_max_eigenvalue = 0.0;
  std::vector<BoundCertificate> certificates;
  std::vector<DetectorVerdict> detectors;
  std::int64_t best_bound = 1;
  Verdict verdict = Verdict::Inconclusive;

  const BoundCertificate* find(BoundName name) const;
  const DetectorVerdict* find(DetectorName name) const;
};

/// Ranks of g_X = (Id +- F) g (Id +- F) and of its marginals.
FlipPartRanks flip_part_ranks(const BipartiteState& gamma, Sign sign,
                              const ToleranceConfig& cfg);

/// rank(g) SN(g) >= max(rank g_L, rank g_R). Throws ZeroState on rank 0.
BoundCertificate sn_lower_marginal(const BipartiteState& gamma,
                                   const ToleranceConfig& cfg);

/// Marginal-rank ratio of g_S (Sign::Plus) or g_A (Sign::Minus). A vanishing
/// part yields the vacuous value 1 flagged degenerate.
BoundCertificate sn_lower_corollary(const BipartiteState& gamma, Sign which,
                                    const ToleranceConfig& cfg);

/// SN(g) >= SN(g_X) / 2 with SN(g_X) bounded below by the exact Schmidt rank
/// when g_X has rank one, and by its own marginal-rank bound otherwise.
BoundCertificate sn_lower_halving(const BipartiteState& gamma, Sign which,
                                  const ToleranceConfig& cfg);

BoundCertificate marginal_certificate(Index rank, Index rank_left,
                                      Index rank_right);
BoundCertificate corollary_certificate(const FlipPartRanks& part, Sign which);
BoundCertificate halving_certificate(const FlipPartRanks& part, Sign which);

/// Entangled iff min eig(g^T_B) < -psd_tol * lambda_max(g^T_B).
DetectorVerdict detect_ppt(const BipartiteState& gamma,
                           const ToleranceConfig& cfg);

/// Entangled iff rank(g_S) < sqrt(rank(g_A)), compared in integers.
DetectorVerdict detect_sqrt_rank(const BipartiteState& gamma,
                                 const ToleranceConfig& cfg);

BoundReport analyze(const BipartiteState& gamma, const ToleranceConfig& cfg);

}  // namespace schmidt
