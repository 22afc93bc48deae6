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

#include <ostream>
#include <string>
#include <vector>

namespace schmidt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNotCertified = 2,
  kNumerical = 3,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

/// Runs `schmidt-bounds <args...>` (args exclude the program name) and
/// returns the process exit code. Never throws.
int run(const std::vector<std::string>& args, Streams io);

/// Default sidecar path for a constructed state: "x.json" -> "x.cert.json".
std::string sidecar_path(const std::string& state_path);

}  // namespace schmidt::cli
