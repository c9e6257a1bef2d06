// Copyright 2026 The weave Authors
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

#ifndef WEAVE_TOOLS_CLI_COMMANDS_H
#define WEAVE_TOOLS_CLI_COMMANDS_H

#include <iosfwd>
#include <string>

#include "cli/report.h"
#include "weave/correlations.h"

namespace weave::cli {

/// Exit statuses of the `weave` executable.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitArgument = 2,
  kExitCapacity = 3,
  kExitNumeric = 4,
  kExitPropertyFailure = 5,
};

struct TableOptions {
  int n = 4;
  int d = 2;
  std::string weights = "k-1";
  MinimizationMode mode = MinimizationMode::brute;
  int workers = 1;
  bool closed_form_only = false;
  int matrix_max_n = 8;
  Limits limits;
};

/// One row per closed-form family (skipping families undefined at this N), with the
/// matrix pipeline run alongside when N <= matrix_max_n.
TableReport build_table(const TableOptions& options);

struct ProfileOptionsCli {
  std::string state;
  std::string weights = "k-1";
  MinimizationMode mode = MinimizationMode::automatic;
  int workers = 1;
  Limits limits;
};

ProfileRecord build_profile(const ProfileOptionsCli& options);

struct ScalingOptions {
  std::string family;
  int n_min = 2;
  int n_max = 1024;
  int step = 0;  // 0 doubles N at each point
  int d = 2;
  double a = 0.70710678118654752440;
  std::string weights = "k-1";
};

ScalingReport build_scaling(const ScalingOptions& options);

/// Parses arguments, runs one subcommand, writes the report to `out` and diagnostics
/// to `err`, and returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weave::cli

#endif  // WEAVE_TOOLS_CLI_COMMANDS_H
