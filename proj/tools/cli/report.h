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

#ifndef WEAVE_TOOLS_CLI_REPORT_H
#define WEAVE_TOOLS_CLI_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "cli/property_suite.h"
#include "weave/closed_forms.h"
#include "weave/density_state.h"

namespace weave::cli {

enum class OutputFormat { json, csv };

/// All reported numbers carry 12 significant digits. Rounding happens before the JSON
/// encoder sees a value, so parsing the emitted JSON gives back exactly the reported
/// doubles.
double round12(double x);
std::string format12(double x);

struct WeightsInfo {
  std::string spec;
  std::vector<double> omega;  // omega_2..omega_N
};

struct ProfileRecord {
  std::string source;  // family spec or file path
  bool from_file = false;
  Dims dims;
  std::string mode;  // the one actually used: "brute" or "fast"
  std::vector<double> dist;     // k = 1..N
  std::vector<double> genuine;  // k = 2..N
  double total = 0.0;
  double weaving = 0.0;
  WeightsInfo weights;
  std::optional<double> neural_complexity;
  std::vector<std::string> argmin;  // k = 1..N
};

struct MatrixCheck {
  std::vector<double> dist;
  std::vector<double> genuine;
  double weaving = 0.0;
  double max_disagreement = 0.0;
};

struct TableRow {
  std::string family;
  int n = 0;
  int d = 2;
  std::vector<double> dist;     // closed form, k = 1..N
  std::vector<double> genuine;  // closed form, k = 2..N
  double total = 0.0;
  double weaving = 0.0;
  std::optional<MatrixCheck> matrix;
};

struct TableReport {
  int n = 0;
  int d = 2;
  std::string mode;
  WeightsInfo weights;
  double tolerance = 1e-8;
  std::vector<TableRow> rows;
  std::vector<std::string> skipped;  // rows not defined at this N

  bool agrees() const;
};

struct ScalingReport {
  std::string family;
  std::string law;
  std::string weights;
  std::vector<ScalingPoint> points;
};

std::string render(const ProfileRecord& r, OutputFormat format);
std::string render(const TableReport& r, OutputFormat format);
std::string render(const ScalingReport& r, OutputFormat format);
std::string render(const SuiteReport& r, OutputFormat format);

}  // namespace weave::cli

#endif  // WEAVE_TOOLS_CLI_REPORT_H
