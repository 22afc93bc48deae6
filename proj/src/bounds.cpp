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

#include "schmidt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace schmidt {

namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

const char* part_suffix(Sign which) {
  return which == Sign::Plus ? "S" : "A";
}

std::string key(const char* stem, Sign which, const char* tail = "") {
  return std::string(stem) + part_suffix(which) + tail;
}

Sign sign_of(BoundName name) {
  return (name == BoundName::SymMarginalRatio ||
          name == BoundName::SymHalving)
             ? Sign::Plus
             : Sign::Minus;
}

bool has_input(const BoundCertificate& cert, std::string_view name) {
  return std::any_of(cert.inputs.begin(), cert.inputs.end(),
                     [&](const NamedCount& c) { return c.name == name; });
}

DetectorVerdict ppt_verdict(const RealVector& pt_eigs,
                            const ToleranceConfig& cfg) {
  DetectorVerdict out;
  out.detector = DetectorName::Ppt;
  const double lo = pt_eigs.size() ? pt_eigs(0) : 0.0;
  const double hi = pt_eigs.size() ? pt_eigs(pt_eigs.size() - 1) : 0.0;
  const double floor = psd_floor(pt_eigs, cfg);
  out.verdict = lo < floor ? Verdict::Entangled : Verdict::Inconclusive;
  out.evidence = {{"min_eigenvalue_pt", lo},
                  {"max_eigenvalue_pt", hi},
                  {"threshold", floor}};
  return out;
}

DetectorVerdict sqrt_verdict(Index rank_sym, Index rank_asym) {
  DetectorVerdict out;
  out.detector = DetectorName::SqrtRank;
  // rank_S < sqrt(rank_A)  <=>  rank_S^2 < rank_A for nonnegative integers.
  out.verdict = rank_sym * rank_sym < rank_asym ? Verdict::Entangled
                                                : Verdict::Inconclusive;
  out.evidence = {{"rank_gamma_S", static_cast<double>(rank_sym)},
                  {"rank_gamma_A", static_cast<double>(rank_asym)}};
  return out;
}

}  // namespace

std::string_view to_string(BoundName name) noexcept {
  switch (name) {
    case BoundName::MarginalRank: return "marginal_rank";
    case BoundName::SymMarginalRatio: return "sym_corollary";
    case BoundName::AsymMarginalRatio: return "asym_corollary";
    case BoundName::AsymHalving: return "prop1_asym";
    case BoundName::SymHalving: return "prop1_sym";
  }
  return "unknown";
}

std::string_view to_string(DetectorName name) noexcept {
  switch (name) {
    case DetectorName::Ppt: return "ppt_test";
    case DetectorName::SqrtRank: return "sqrt_rank_test";
    case DetectorName::SnBoundExceedsOne: return "sn_bound_exceeds_one";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::Entangled ? "entangled" : "inconclusive";
}

std::int64_t BoundCertificate::input(std::string_view name) const {
  for (const auto& c : inputs)
    if (c.name == name) return c.value;
  throw Error(ErrorCode::InvalidArgument,
              "certificate has no input named " + std::string(name));
}

const BoundCertificate* BoundReport::find(BoundName name) const {
  for (const auto& c : certificates)
    if (c.name == name) return &c;
  return nullptr;
}

const DetectorVerdict* BoundReport::find(DetectorName name) const {
  for (const auto& d : detectors)
    if (d.detector == name) return &d;
  return nullptr;
}

// --- certificates from ranks -----------------------------------------------

BoundCertificate marginal_certificate(Index rank, Index rank_left,
                                      Index rank_right) {
  BoundCertificate cert;
  cert.name = BoundName::MarginalRank;
  cert.inputs = {{"rank_gamma", rank},
                 {"rank_gamma_L", rank_left},
                 {"rank_gamma_R", rank_right}};
  std::ostringstream trace;
  if (rank == 0) {
    cert.degenerate = true;
    cert.value = 1;
    trace << "rank(gamma) = 0: vacuous bound 1";
  } else {
    const std::int64_t top = std::max(rank_left, rank_right);
    cert.value = std::max<std::int64_t>(1, ceil_div(top, rank));
    trace << "ceil(max(" << rank_left << ", " << rank_right << ") / " << rank
          << ") = " << cert.value;
  }
  cert.formula_trace = trace.str();
  return cert;
}

BoundCertificate corollary_certificate(const FlipPartRanks& part,
                                       Sign which) {
  BoundCertificate cert;
  cert.name = which == Sign::Plus ? BoundName::SymMarginalRatio
                                  : BoundName::AsymMarginalRatio;
  const std::string r = key("rank_gamma_", which);
  const std::string rl = key("rank_gamma_", which, "_L");
  cert.inputs = {{r, part.rank}, {rl, part.marginal_left}};
  std::ostringstream trace;
  if (part.rank == 0) {
    cert.degenerate = true;
    cert.value = 1;
    trace << "rank(gamma_" << part_suffix(which) << ") = 0: vacuous bound 1";
  } else {
    cert.value =
        std::max<std::int64_t>(1, ceil_div(part.marginal_left, 2 * part.rank));
    trace << "max(1, ceil(" << part.marginal_left << " / (2 * " << part.rank
          << "))) = " << cert.value;
  }
  cert.formula_trace = trace.str();
  return cert;
}

BoundCertificate halving_certificate(const FlipPartRanks& part, Sign which) {
  BoundCertificate cert;
  cert.name =
      which == Sign::Plus ? BoundName::SymHalving : BoundName::AsymHalving;
  const char* x = part_suffix(which);
  cert.inputs = {{key("rank_gamma_", which), part.rank}};
  std::ostringstream trace;
  if (part.rank == 0) {
    cert.degenerate = true;
    cert.value = 1;
    trace << "rank(gamma_" << x << ") = 0: vacuous bound 1";
  } else if (part.rank == 1 && part.pure_schmidt_rank) {
    const std::int64_t sr = *part.pure_schmidt_rank;
    cert.inputs.push_back({"sr_of_pure_part", sr});
    cert.value = std::max<std::int64_t>(1, ceil_div(sr, 2));
    trace << "SN(gamma_" << x << ") = SR = " << sr << "; max(1, ceil(" << sr
          << " / 2)) = " << cert.value;
  } else {
    cert.inputs.push_back({key("rank_gamma_", which, "_L"), part.marginal_left});
    cert.inputs.push_back(
        {key("rank_gamma_", which, "_R"), part.marginal_right});
    const std::int64_t inner = std::max<std::int64_t>(
        1, ceil_div(std::max(part.marginal_left, part.marginal_right),
                    part.rank));
    cert.value = std::max<std::int64_t>(1, ceil_div(inner, 2));
    trace << "SN(gamma_" << x << ") >= ceil(max(" << part.marginal_left << ", "
          << part.marginal_right << ") / " << part.rank << ") = " << inner
          << "; max(1, ceil(" << inner << " / 2)) = " << cert.value;
  }
  cert.formula_trace = trace.str();
  return cert;
}

std::int64_t replay(const BoundCertificate& cert) {
  switch (cert.name) {
    case BoundName::MarginalRank:
      return marginal_certificate(cert.input("rank_gamma"),
                                  cert.input("rank_gamma_L"),
                                  cert.input("rank_gamma_R"))
          .value;
    case BoundName::SymMarginalRatio:
    case BoundName::AsymMarginalRatio: {
      const Sign which = sign_of(cert.name);
      FlipPartRanks part;
      part.rank = cert.input(key("rank_gamma_", which));
      part.marginal_left = cert.input(key("rank_gamma_", which, "_L"));
      return corollary_certificate(part, which).value;
    }
    case BoundName::SymHalving:
    case BoundName::AsymHalving: {
      const Sign which = sign_of(cert.name);
      FlipPartRanks part;
      part.rank = cert.input(key("rank_gamma_", which));
      if (has_input(cert, "sr_of_pure_part"))
        part.pure_schmidt_rank = cert.input("sr_of_pure_part");
      if (has_input(cert, key("rank_gamma_", which, "_L"))) {
        part.marginal_left = cert.input(key("rank_gamma_", which, "_L"));
        part.marginal_right = cert.input(key("rank_gamma_", which, "_R"));
      }
      return halving_certificate(part, which).value;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown certificate kind");
}

// --- certificates from states ----------------------------------------------

FlipPartRanks flip_part_ranks(const BipartiteState& gamma, Sign sign,
                              const ToleranceConfig& cfg) {
  const BipartiteState part = symmetrize(gamma, sign);
  FlipPartRanks out;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(part.matrix());
  out.rank = rank_from_spectrum(solver.eigenvalues(), cfg);
  out.marginal_left = numerical_rank(marginal(part, Side::Left), cfg);
  out.marginal_right = numerical_rank(marginal(part, Side::Right), cfg);
  if (out.rank == 1) {
    const Index top = solver.eigenvalues().size() - 1;
    const double lambda = solver.eigenvalues()(top);
    const Vector x = solver.eigenvectors().col(top) * std::sqrt(lambda);
    out.pure_schmidt_rank = schmidt_rank(PureVector(gamma.dims(), x), cfg);
  }
  return out;
}

BoundCertificate sn_lower_marginal(const BipartiteState& gamma,
                                   const ToleranceConfig& cfg) {
  const Index rank = numerical_rank(gamma.matrix(), cfg);
  if (rank == 0)
    throw Error(ErrorCode::ZeroState,
                "marginal-rank bound is undefined for the zero state");
  return marginal_certificate(rank,
                              numerical_rank(marginal(gamma, Side::Left), cfg),
                              numerical_rank(marginal(gamma, Side::Right), cfg));
}

BoundCertificate sn_lower_corollary(const BipartiteState& gamma, Sign which,
                                    const ToleranceConfig& cfg) {
  return corollary_certificate(flip_part_ranks(gamma, which, cfg), which);
}

BoundCertificate sn_lower_halving(const BipartiteState& gamma, Sign which,
                                  const ToleranceConfig& cfg) {
  return halving_certificate(flip_part_ranks(gamma, which, cfg), which);
}

DetectorVerdict detect_ppt(const BipartiteState& gamma,
                           const ToleranceConfig& cfg) {
  return ppt_verdict(hermitian_eigenvalues(partial_transpose(gamma), cfg),
                     cfg);
}

DetectorVerdict detect_sqrt_rank(const BipartiteState& gamma,
                                 const ToleranceConfig& cfg) {
  if (!gamma.dims().square())
    throw Error(ErrorCode::NonSquareFactors,
                "sqrt-rank test requires equal factor dimensions");
  return sqrt_verdict(numerical_rank(symmetrize(gamma, Sign::Plus).matrix(), cfg),
                      numerical_rank(symmetrize(gamma, Sign::Minus).matrix(), cfg));
}

BoundReport analyze(const BipartiteState& gamma, const ToleranceConfig& cfg) {
  cfg.validate();
  BoundReport report;
  report.dims = gamma.dims();

  RankProfile& ranks = report.ranks;
  ranks.gamma = numerical_rank(gamma.matrix(), cfg);
  ranks.gamma_left = numerical_rank(marginal(gamma, Side::Left), cfg);
  ranks.gamma_right = numerical_rank(marginal(gamma, Side::Right), cfg);
  report.certificates.push_back(
      marginal_certificate(ranks.gamma, ranks.gamma_left, ranks.gamma_right));

  if (gamma.dims().square()) {
    ranks.sym = flip_part_ranks(gamma, Sign::Plus, cfg);
    ranks.asym = flip_part_ranks(gamma, Sign::Minus, cfg);
    report.certificates.push_back(corollary_certificate(*ranks.sym, Sign::Plus));
    report.certificates.push_back(
        corollary_certificate(*ranks.asym, Sign::Minus));
    report.certificates.push_back(halving_certificate(*ranks.asym, Sign::Minus));
    report.certificates.push_back(halving_certificate(*ranks.sym, Sign::Plus));
  }

  const RealVector pt = hermitian_eigenvalues(partial_transpose(gamma), cfg);
  report.pt_min_eigenvalue = pt.size() ? pt(0) : 0.0;
  report.pt_max_eigenvalue = pt.size() ? pt(pt.size() - 1) : 0.0;
  report.detectors.push_back(ppt_verdict(pt, cfg));
  if (gamma.dims().square())
    report.detectors.push_back(sqrt_verdict(ranks.sym->rank, ranks.asym->rank));

  const BoundCertificate* best = &report.certificates.front();
  for (const auto& c : report.certificates)
    if (c.value > best->value) best = &c;
  report.best_bound = best->value;

  DetectorVerdict sn;
  sn.detector = DetectorName::SnBoundExceedsOne;
  sn.verdict = report.best_bound >= 2 ? Verdict::Entangled
                                      : Verdict::Inconclusive;
  sn.evidence = {{std::string(to_string(best->name)),
                  static_cast<double>(best->value)}};
  report.detectors.push_back(std::move(sn));

  report.verdict = Verdict::Inconclusive;
  for (const auto& d : report.detectors)
    if (d.verdict == Verdict::Entangled) report.verdict = Verdict::Entangled;
  return report;
}

}  // namespace schmidt
