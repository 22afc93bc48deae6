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

#include "schmidt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "schmidt/constructions.hpp"

namespace schmidt {

namespace {

struct TrialOutcome {
  std::vector<bool> passed;  // one per check, in check order
  std::vector<std::pair<const char*, Index>> ranks;
};

std::vector<CheckTally> checks_for(const SweepConfig& c) {
  const bool square = c.k == c.m;
  std::vector<CheckTally> out;
  switch (c.ensemble) {
    case Ensemble::Separable:
      out.push_back({"rank_inequality", true});
      if (square) out.push_back({"sqrt_rank", true});
      break;
    case Ensemble::Pure:
      out.push_back({"pure_marginal_equality", true});
      out.push_back({"pure_rank_inequality", true});
      if (square) {
        out.push_back({"flip_schmidt_rank", true});
        out.push_back({"sqrt_rank", false});
      }
      break;
    case Ensemble::Density:
      out.push_back({"rank_inequality", false});
      if (square) out.push_back({"sqrt_rank", false});
      break;
  }
  return out;
}

Index draw(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

TrialOutcome run_trial(const SweepConfig& c, std::int64_t trial) {
  const ToleranceConfig& tol = c.tol;
  std::mt19937_64 rng(trial_seed(c.seed, static_cast<std::uint64_t>(trial)));
  const bool square = c.k == c.m;
  TrialOutcome out;

  std::optional<PureVector> pure;
  std::optional<BipartiteState> gamma;
  switch (c.ensemble) {
    case Ensemble::Separable: {
      const Index terms = draw(rng, 1, c.k * c.m);
      gamma = random_separable(c.k, c.m, terms, rng());
      break;
    }
    case Ensemble::Pure: {
      const Index sr = draw(rng, 1, std::min(c.k, c.m));
      pure = random_pure(c.k, c.m, sr, rng());
      gamma = BipartiteState::pure(*pure);
      break;
    }
    case Ensemble::Density: {
      const Index rank = draw(rng, 1, c.k * c.m);
      gamma = random_density(c.k, c.m, rank, rng());
      break;
    }
  }

  const Index rank = numerical_rank(gamma->matrix(), tol);
  const Index left = numerical_rank(marginal(*gamma, Side::Left), tol);
  const Index right = numerical_rank(marginal(*gamma, Side::Right), tol);
  out.ranks = {{"rank_gamma", rank},
               {"rank_gamma_L", left},
               {"rank_gamma_R", right}};
  Index rank_sym = 0, rank_asym = 0;
  if (square) {
    rank_sym = numerical_rank(symmetrize(*gamma, Sign::Plus).matrix(), tol);
    rank_asym = numerical_rank(symmetrize(*gamma, Sign::Minus).matrix(), tol);
    out.ranks.push_back({"rank_gamma_S", rank_sym});
    out.ranks.push_back({"rank_gamma_A", rank_asym});
  }
  const bool sqrt_ok = rank_sym * rank_sym >= rank_asym;

  switch (c.ensemble) {
    case Ensemble::Separable:
    case Ensemble::Density:
      out.passed.push_back(rank >= std::max(left, right));
      if (square) out.passed.push_back(sqrt_ok);
      break;
    case Ensemble::Pure: {
      const Index sr = schmidt_rank(*pure, tol);
      out.ranks.push_back({"schmidt_rank", sr});
      out.passed.push_back(left == sr && right == sr);
      out.passed.push_back(rank * sr >= std::max(left, right));
      if (square) {
        const Vector& w = pure->entries();
        const Vector fw = apply_flip(w, c.k);
        const Index sr_plus = schmidt_rank(PureVector(pure->dims(), w + fw), tol);
        const Index sr_minus = schmidt_rank(PureVector(pure->dims(), w - fw), tol);
        out.passed.push_back(sr_plus <= 2 * sr && sr_minus <= 2 * sr);
        out.passed.push_back(sqrt_ok);
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::Separable: return "separable";
    case Ensemble::Pure: return "pure";
    case Ensemble::Density: return "density";
  }
  return "unknown";
}

Ensemble parse_ensemble(std::string_view name) {
  if (name == "separable") return Ensemble::Separable;
  if (name == "pure") return Ensemble::Pure;
  if (name == "density") return Ensemble::Density;
  throw Error(ErrorCode::InvalidArgument,
              "unknown ensemble '" + std::string(name) + "'");
}

std::int64_t SweepResult::guaranteed_violations() const {
  std::int64_t total = 0;
  for (const auto& c : checks)
    if (c.guaranteed) total += c.violated;
  return total;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.tol.validate();
  if (config.trials < 1)
    throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (config.k < 1 || config.m < 1)
    throw Error(ErrorCode::InvalidArgument, "dimensions must be positive");

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
  const int jobs = std::clamp<std::int64_t>(config.jobs, 1, config.trials);
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::int64_t t = next++; t < config.trials; t = next++) {
      try {
        outcomes[static_cast<std::size_t>(t)] = run_trial(config, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.config = config;
  result.checks = checks_for(config);
  for (const auto& outcome : outcomes) {
    for (std::size_t c = 0; c < result.checks.size(); ++c)
      ++(outcome.passed[c] ? result.checks[c].passed
                           : result.checks[c].violated);
    for (const auto& [name, value] : outcome.ranks)
      ++result.histograms[name][value];
  }
  return result;
}

}  // namespace schmidt
