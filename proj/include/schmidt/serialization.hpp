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

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "schmidt/bounds.hpp"
#include "schmidt/constructions.hpp"
#include "schmidt/statespace.hpp"
#include "schmidt/sweep.hpp"

namespace schmidt {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kStateFormat = "schmidt-bounds/state";
inline constexpr std::string_view kBasisOrder =
    "row-major product basis: e_i (x) e_j -> i*dim_right + j (0-based)";

/// Raw contents of a state file; not yet validated as a state.
struct StateFile {
  Dims dims;
  Matrix matrix;
};

Json complex_to_json(Complex z);
Json vector_to_json(const Vector& v);

Json state_to_json(Dims dims, const Matrix& matrix);
/// Throws Error(Schema) on missing fields, wrong shapes or non-finite numbers.
StateFile state_from_json(const Json& doc);

std::string read_file_bytes(const std::filesystem::path& path);
StateFile read_state_file(const std::filesystem::path& path);

/// Dump with a trailing newline, two-space indented when `pretty`. Doubles use
/// the shortest representation that parses back to the same bits.
std::string dump_json(const Json& doc, bool pretty = true);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

Json to_json(const ToleranceConfig& cfg);
Json to_json(const StateValidation& v);
Json to_json(const BoundCertificate& cert);
Json to_json(const DetectorVerdict& verdict);
Json to_json(const RankProfile& ranks);
Json to_json(const BoundReport& report);
Json to_json(const ProductDecomposition& decomposition);
Json to_json(const SchmidtNumberWitness& witness, const ToleranceConfig& cfg);
Json to_json(const SweepResult& result);

}  // namespace schmidt
