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

#include "schmidt/serialization.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include <openssl/evp.h>

namespace schmidt {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::Schema, "state file: " + what);
}

Json named_counts(const std::vector<NamedCount>& items) {
  Json out = Json::object();
  for (const auto& c : items) out[c.name] = c.value;
  return out;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(); }

}  // namespace

Json complex_to_json(Complex z) {
  return Json::array({finite_or_null(z.real()), finite_or_null(z.imag())});
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json state_to_json(Dims dims, const Matrix& matrix) {
  Json doc;
  doc["format"] = kStateFormat;
  doc["dim_left"] = dims.left;
  doc["dim_right"] = dims.right;
  doc["basis_order"] = kBasisOrder;
  Json rows = Json::array();
  for (Index r = 0; r < matrix.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < matrix.cols(); ++c)
      row.push_back(complex_to_json(matrix(r, c)));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

StateFile state_from_json(const Json& doc) {
  if (!doc.is_object()) schema_error("top level must be an object");
  for (const char* field : {"dim_left", "dim_right", "matrix"})
    if (!doc.contains(field))
      schema_error(std::string("missing field '") + field + "'");
  if (!doc["dim_left"].is_number_integer() ||
      !doc["dim_right"].is_number_integer())
    schema_error("dim_left and dim_right must be integers");
  StateFile out;
  out.dims = {doc["dim_left"].get<Index>(), doc["dim_right"].get<Index>()};
  if (out.dims.left < 1 || out.dims.right < 1)
    schema_error("dimensions must be positive");

  const Index d = out.dims.total();
  const Json& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<Index>(rows.size()) != d)
    schema_error("matrix must be an array of " + std::to_string(d) + " rows");
  out.matrix.resize(d, d);
  for (Index r = 0; r < d; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != d)
      schema_error("row " + std::to_string(r) + " must have " +
                   std::to_string(d) + " entries");
    for (Index c = 0; c < d; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
          !z[1].is_number())
        schema_error("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                     ") must be a [re, im] pair of numbers");
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        schema_error("non-finite entry at (" + std::to_string(r) + ", " +
                     std::to_string(c) + ")");
      out.matrix(r, c) = Complex(re, im);
    }
  }
  return out;
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

StateFile read_state_file(const std::filesystem::path& path) {
  const std::string bytes = read_file_bytes(path);
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Schema,
                path.string() + ": invalid JSON: " + e.what());
  }
  return state_from_json(doc);
}

std::string dump_json(const Json& doc, bool pretty) {
  return (pretty ? doc.dump(2) : doc.dump()) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1)
    throw Error(ErrorCode::Io, "SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  return hex.str();
}

Json to_json(const ToleranceConfig& cfg) {
  return {{"rel_rank_tol", cfg.rel_rank_tol},
          {"psd_tol", cfg.psd_tol},
          {"recon_tol", cfg.recon_tol}};
}

Json to_json(const StateValidation& v) {
  return {{"valid", v.valid()},
          {"hermitian", v.hermitian},
          {"psd", v.psd},
          {"hermitian_defect", v.hermitian_defect},
          {"min_eigenvalue", v.min_eigenvalue},
          {"max_eigenvalue", v.max_eigenvalue},
          {"message", v.message}};
}

Json to_json(const BoundCertificate& cert) {
  return {{"bound_name", to_string(cert.name)},
          {"value", cert.value},
          {"degenerate", cert.degenerate},
          {"inputs", named_counts(cert.inputs)},
          {"formula_trace", cert.formula_trace}};
}

Json to_json(const DetectorVerdict& verdict) {
  Json evidence = Json::object();
  for (const auto& e : verdict.evidence) evidence[e.name] = e.value;
  return {{"detector", to_string(verdict.detector)},
          {"verdict", to_string(verdict.verdict)},
          {"evidence", std::move(evidence)}};
}

Json to_json(const RankProfile& ranks) {
  Json out = {{"gamma", ranks.gamma},
              {"gamma_L", ranks.gamma_left},
              {"gamma_R", ranks.gamma_right}};
  auto part = [&](const char* stem, const std::optional<FlipPartRanks>& p) {
    const std::string s(stem);
    out[s] = p ? Json(p->rank) : Json();
    out[s + "_L"] = p ? Json(p->marginal_left) : Json();
    out[s + "_R"] = p ? Json(p->marginal_right) : Json();
  };
  part("gamma_S", ranks.sym);
  part("gamma_A", ranks.asym);
  return out;
}

Json to_json(const BoundReport& report) {
  Json certs = Json::array();
  for (const auto& c : report.certificates) certs.push_back(to_json(c));
  Json dets = Json::array();
  for (const auto& d : report.detectors) dets.push_back(to_json(d));
  return {{"dims", {{"dim_left", report.dims.left},
                    {"dim_right", report.dims.right}}},
          {"ranks", to_json(report.ranks)},
          {"pt_min_eigenvalue", report.pt_min_eigenvalue},
          {"pt_max_eigenvalue", report.pt_max_eigenvalue},
          {"certificates", std::move(certs)},
          {"detectors", std::move(dets)},
          {"best_bound", report.best_bound},
          {"verdict", to_string(report.verdict)}};
}

Json to_json(const ProductDecomposition& decomposition) {
  Json terms = Json::array();
  for (const auto& t : decomposition.terms)
    terms.push_back({{"weight", t.weight},
                     {"left", vector_to_json(t.left)},
                     {"right", vector_to_json(t.right)}});
  return {{"target", decomposition.target_label},
          {"dim_left", decomposition.dims.left},
          {"dim_right", decomposition.dims.right},
          {"num_terms", decomposition.terms.size()},
          {"terms", std::move(terms)}};
}

Json to_json(const SchmidtNumberWitness& witness, const ToleranceConfig& cfg) {
  Json entangled = Json::array();
  for (const auto& t : witness.entangled_terms)
    entangled.push_back({{"weight", t.weight},
                         {"schmidt_rank", schmidt_rank(t.vector, cfg)},
                         {"vector", vector_to_json(t.vector.entries())}});
  return {{"value", witness.value},
          {"reconstruction_error", witness.reconstruction_error},
          {"product_terms", witness.product_terms},
          {"entangled_terms", std::move(entangled)}};
}

Json to_json(const SweepResult& result) {
  Json checks = Json::array();
  for (const auto& c : result.checks)
    checks.push_back({{"name", c.name},
                      {"guaranteed", c.guaranteed},
                      {"passed", c.passed},
                      {"violated", c.violated}});
  Json hist = Json::object();
  for (const auto& [name, counts] : result.histograms) {
    Json h = Json::object();
    for (const auto& [rank, count] : counts) h[std::to_string(rank)] = count;
    hist[name] = std::move(h);
  }
  const auto& c = result.config;
  const std::int64_t violations = result.guaranteed_violations();
  return {{"tool_version", kToolVersion},
          {"ensemble", to_string(c.ensemble)},
          {"k", c.k},
          {"m", c.m},
          {"trials", c.trials},
          {"seed", c.seed},
          {"seed_schedule", "splitmix64(seed + (trial + 1) * 0x9E3779B97F4A7C15)"},
          {"tolerances", to_json(c.tol)},
          {"checks", std::move(checks)},
          {"rank_histograms", std::move(hist)},
          {"guaranteed_violations", violations},
          {"status", violations == 0 ? "ok" : "violated"}};
}

}  // namespace schmidt
