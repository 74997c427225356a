// Copyright 2026 The liegeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace liegeo::cli {

/// Exit codes: all verdicts consistent, some verdict violated, usage or input error.
enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::string input;    // algebra document path, "-" for stdin
  std::string catalog;  // catalog id
  std::size_t grid = 16;
  double h = 1e-3;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string out;      // empty: stdout
  std::size_t planes = 0;
  bool table = false;
  std::vector<std::string> lemmas{"all"};
  std::string direction;  // basis label or comma-separated coefficients
  bool convergence = true;
};

const std::vector<std::string>& command_names();

/// Throws std::invalid_argument on an invalid configuration.
void check_config(const RunConfig& config);

/// Runs one command; `in` backs input "-". Errors are reported on `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs; LIEGEO_TOL sets the default tolerance.
int main_entry(int argc, char** argv);

}  // namespace liegeo::cli
