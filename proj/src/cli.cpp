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

#include "schmidt/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "schmidt/bounds.hpp"
#include "schmidt/constructions.hpp"
#include "schmidt/serialization.hpp"
#include "schmidt/sweep.hpp"

namespace schmidt::cli {

namespace {

void diagnose(const Streams& io, const std::string& message) {
  if (io.color)
    io.err << "\033[1;31merror:\033[0m " << message << "\n";
  else
    io.err << "error: " << message << "\n";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EpsilonSearchFailed:
    case ErrorCode::ReconstructionFailed:
      return kNumerical;
    default:
      return kUsage;
  }
}

void emit(const Streams& io, const std::string& output, const Json& doc,
          bool pretty = true) {
  const std::string text = dump_json(doc, pretty);
  if (output.empty() || output == "-")
    io.out << text;
  else
    write_text_file(output, text);
}

struct LoadedState {
  std::string digest;
  BipartiteState state;
  StateValidation validation;
};

LoadedState load_state(const std::string& path, const ToleranceConfig& cfg) {
  const std::string bytes = read_file_bytes(path);
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Schema, path + ": invalid JSON: " + e.what());
  }
  StateFile file = state_from_json(doc);
  StateValidation validation = check_state(file.matrix, file.dims, cfg);
  if (!validation.valid())
    throw Error(validation.hermitian ? ErrorCode::NotPositive
                                     : ErrorCode::NotHermitian,
                path + ": not a valid state: " + validation.message);
  return {"sha256:" + sha256_hex(bytes),
          BipartiteState(file.dims, std::move(file.matrix), cfg),
          std::move(validation)};
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string output;
  double tol = 1e-10;
};

int do_analyze(const AnalyzeArgs& args, const Streams& io) {
  const ToleranceConfig cfg = ToleranceConfig::uniform(args.tol);
  const LoadedState loaded = load_state(args.input, cfg);
  const BoundReport report = analyze(loaded.state, cfg);
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["input"] = {{"path", args.input}, {"digest", loaded.digest}};
  doc["tolerances"] = to_json(cfg);
  doc["validation"] = to_json(loaded.validation);
  const Json body = to_json(report);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  emit(io, args.output, doc);
  return kOk;
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::vector<Index> family;
  std::string epsilon = "auto";
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string certificate;
  double tol = 1e-10;
};

int do_construct(const ConstructArgs& args, const Streams& io) {
  const ToleranceConfig cfg = ToleranceConfig::uniform(args.tol);
  const Index k = args.family.at(0), n = args.family.at(1);
  FamilyParams params = args.seed ? FamilyParams::random(k, n, *args.seed)
                                  : FamilyParams::canonical(k, n);
  const PureVector v = family_vector(params, cfg);

  const bool auto_mode = args.epsilon == "auto";
  if (auto_mode) {
    params.epsilon = auto_epsilon(v, cfg);
  } else {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(args.epsilon, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != args.epsilon.size() || !(value > 0.0) || !std::isfinite(value))
      throw Error(ErrorCode::InvalidArgument,
                  "--epsilon must be 'auto' or a positive number, got '" +
                      args.epsilon + "'");
    params.epsilon = value;
  }

  const BipartiteState gamma = family_state(params, cfg);
  const std::string state_text = dump_json(state_to_json(gamma.dims(), gamma.matrix()), false);
  write_text_file(args.output, state_text);

  const BoundReport report = analyze(gamma, cfg);
  const DetectorVerdict* ppt = report.find(DetectorName::Ppt);
  const bool is_ppt = ppt->verdict == Verdict::Inconclusive;

  Json vectors_a = Json::array(), vectors_b = Json::array();
  for (Index i = 0; i < n; ++i) {
    vectors_a.push_back(vector_to_json(params.a_vectors[i]));
    vectors_b.push_back(vector_to_json(params.b_vectors[i]));
  }
  Json certs = Json::array();
  for (const auto& c : report.certificates) certs.push_back(to_json(c));

  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["state_file"] = std::filesystem::path(args.output).filename().string();
  doc["state_digest"] = "sha256:" + sha256_hex(state_text);
  doc["tolerances"] = to_json(cfg);
  doc["family"] = {{"k", k},
                   {"n", n},
                   {"epsilon", params.epsilon},
                   {"epsilon_mode", auto_mode ? "auto" : "fixed"},
                   {"seed", args.seed ? Json(*args.seed) : Json()},
                   {"a_vectors", std::move(vectors_a)},
                   {"b_vectors", std::move(vectors_b)}};
  doc["ppt"] = is_ppt;
  doc["pt_min_eigenvalue"] = report.pt_min_eigenvalue;
  doc["pt_max_eigenvalue"] = report.pt_max_eigenvalue;
  doc["sn_lower"] = report.best_bound;
  doc["lower_certificates"] = std::move(certs);
  if (k <= kMaxPhaseEnumerationDim) {
    const SchmidtNumberWitness upper = sn_upper_certificate(params, cfg);
    doc["sn_upper"] = upper.value;
    doc["upper_certificate"] = to_json(upper, cfg);
    doc["schmidt_number"] =
        upper.value == report.best_bound ? Json(upper.value) : Json();
  } else {
    doc["sn_upper"] = nullptr;
    doc["upper_certificate"] = nullptr;
    doc["schmidt_number"] = nullptr;
  }
  write_text_file(args.certificate.empty() ? sidecar_path(args.output)
                                           : args.certificate,
                  dump_json(doc));

  if (auto_mode && !is_ppt) {
    diagnose(io, "automatic epsilon failed post-verification: min eigenvalue "
                 "of the partial transpose is " +
                     std::to_string(report.pt_min_eigenvalue));
    return kNumerical;
  }
  return kOk;
}

// --- certify ----------------------------------------------------------------

struct CertifyArgs {
  std::string input;
  std::string claim;
  double tol = 1e-10;
};

int do_certify(const CertifyArgs& args, const Streams& io) {
  enum class Claim { SnLower, Ppt, Entangled } claim;
  std::int64_t wanted = 0;
  if (args.claim == "ppt") {
    claim = Claim::Ppt;
  } else if (args.claim == "entangled") {
    claim = Claim::Entangled;
  } else if (args.claim.rfind("sn-lower=", 0) == 0) {
    claim = Claim::SnLower;
    const std::string number = args.claim.substr(9);
    std::size_t used = 0;
    try {
      wanted = std::stoll(number, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (number.empty() || used != number.size() || wanted < 1)
      throw Error(ErrorCode::InvalidArgument,
                  "sn-lower claim needs a positive integer, got '" + number + "'");
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown claim '" + args.claim +
                    "' (expected sn-lower=N, ppt or entangled)");
  }

  const ToleranceConfig cfg = ToleranceConfig::uniform(args.tol);
  const LoadedState loaded = load_state(args.input, cfg);
  const BoundReport report = analyze(loaded.state, cfg);
  bool certified = false;
  std::ostringstream line;
  switch (claim) {
    case Claim::SnLower:
      certified = report.best_bound >= wanted;
      line << "sn-lower=" << wanted << ": best bound " << report.best_bound;
      break;
    case Claim::Ppt:
      certified = report.find(DetectorName::Ppt)->verdict == Verdict::Inconclusive;
      line << "ppt: min eigenvalue of partial transpose "
           << report.pt_min_eigenvalue;
      break;
    case Claim::Entangled:
      certified = report.verdict == Verdict::Entangled;
      line << "entangled: verdict " << to_string(report.verdict);
      break;
  }
  io.out << (certified ? "certified " : "not certified ") << line.str() << "\n";
  return certified ? kOk : kNotCertified;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string ensemble;
  Index k = 2;
  Index m = 2;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  double tol = 1e-10;
  std::string output;
};

int do_sweep(const SweepArgs& args, const Streams& io) {
  SweepConfig config;
  config.ensemble = parse_ensemble(args.ensemble);
  config.k = args.k;
  config.m = args.m;
  config.trials = args.trials;
  config.seed = args.seed;
  config.jobs = args.jobs;
  config.tol = ToleranceConfig::uniform(args.tol);
  const SweepResult result = run_sweep(config);
  emit(io, args.output, to_json(result));
  if (result.guaranteed_violations() > 0) {
    diagnose(io, std::to_string(result.guaranteed_violations()) +
                     " violations of guaranteed inequalities");
    return kNotCertified;
  }
  return kOk;
}

// --- decompose-sym ----------------------------------------------------------

struct DecomposeArgs {
  Index k = 2;
  std::string output;
};

int do_decompose(const DecomposeArgs& args, const Streams& io) {
  const ProductDecomposition decomposition = sym_separable_decomposition(args.k);
  const Index d = args.k * args.k;
  const Matrix target = Matrix::Identity(d, d) + flip_operator(args.k);
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["reconstruction_error"] =
      relative_error(decomposition.reconstruct(), target);
  const Json body = to_json(decomposition);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  emit(io, args.output, doc, false);
  return kOk;
}

}  // namespace

std::string sidecar_path(const std::string& state_path) {
  constexpr std::string_view ext = ".json";
  if (state_path.size() > ext.size() &&
      state_path.compare(state_path.size() - ext.size(), ext.size(), ext) == 0)
    return state_path.substr(0, state_path.size() - ext.size()) + ".cert.json";
  return state_path + ".cert.json";
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Schmidt-number lower bounds, entanglement detectors and PPT "
               "families with certified Schmidt number",
               "schmidt-bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report ranks, bounds and detector verdicts for a state file");
  analyze_cmd->add_option("input", analyze_args.input, "State file")->required();
  analyze_cmd->add_option("--tol", analyze_args.tol, "Rank and PSD tolerance");
  analyze_cmd->add_option("--output", analyze_args.output, "Report path (default: stdout)");

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build Id + F + eps v v^dagger with Schmidt number n");
  construct_cmd->add_option("--family", construct_args.family, "Local dimension k and target n")
      ->expected(2)
      ->required();
  construct_cmd->add_option("--epsilon", construct_args.epsilon, "'auto' or a positive value");
  construct_cmd->add_option("--seed", construct_args.seed, "Draw random a_i, b_i from this seed");
  construct_cmd->add_option("--output", construct_args.output, "State file path")->required();
  construct_cmd->add_option("--certificate", construct_args.certificate,
                            "Sidecar path (default: <output>.cert.json)");
  construct_cmd->add_option("--tol", construct_args.tol, "Rank and PSD tolerance");

  CertifyArgs certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "Exit 0 iff the claim is certified, 2 otherwise");
  certify_cmd->add_option("input", certify_args.input, "State file")->required();
  certify_cmd->add_option("--claim", certify_args.claim, "sn-lower=N | ppt | entangled")->required();
  certify_cmd->add_option("--tol", certify_args.tol, "Rank and PSD tolerance");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check the rank inequalities on a seeded random ensemble");
  sweep_cmd->add_option("--ensemble", sweep_args.ensemble, "separable | pure | density")->required();
  sweep_cmd->add_option("--k", sweep_args.k, "Left dimension")->required();
  sweep_cmd->add_option("--m", sweep_args.m, "Right dimension")->required();
  sweep_cmd->add_option("--trials", sweep_args.trials, "Number of trials")->required();
  sweep_cmd->add_option("--seed", sweep_args.seed, "Master seed")->required();
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads");
  sweep_cmd->add_option("--tol", sweep_args.tol, "Rank tolerance");
  sweep_cmd->add_option("--output", sweep_args.output, "Result path (default: stdout)");

  DecomposeArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand("decompose-sym", "Emit a product-vector decomposition of Id + F");
  decompose_cmd->add_option("--k", decompose_args.k, "Local dimension (<= 8)")->required();
  decompose_cmd->add_option("--output", decompose_args.output, "Output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    io.out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    diagnose(io, e.what());
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return do_analyze(analyze_args, io);
    if (construct_cmd->parsed()) return do_construct(construct_args, io);
    if (certify_cmd->parsed()) return do_certify(certify_args, io);
    if (sweep_cmd->parsed()) return do_sweep(sweep_args, io);
    if (decompose_cmd->parsed()) return do_decompose(decompose_args, io);
  } catch (const Error& e) {
    diagnose(io, e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    diagnose(io, std::string("internal failure: ") + e.what());
    return kNumerical;
  }
  diagnose(io, "no subcommand given");
  return kUsage;
}

}  // namespace schmidt::cli
