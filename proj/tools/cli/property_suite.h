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

#ifndef WEAVE_TOOLS_CLI_PROPERTY_SUITE_H
#define WEAVE_TOOLS_CLI_PROPERTY_SUITE_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weave::cli {

struct PropertyResult {
  std::string name;
  int trials = 0;
  /// Smallest slack seen over all trials. For "a <= b" the slack is b - a; for
  /// "a == b" it is -|a - b|. The property passes when this is >= -tolerance.
  double worst_margin = 0.0;
  bool passed = true;
};

struct SuiteOptions {
  std::uint64_t seed = 2017;
  int trials = 200;
  double tolerance = 1e-8;
  /// Largest number of qubits in a randomly drawn state. Composites built from two
  /// draws may reach 6.
  int max_n = 4;
  /// Applied to every distance the suite computes. Identity unless a test injects a
  /// fault to prove the suite can fail.
  std::function<double(double)> dist_filter;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int trials = 0;
  double tolerance = 0.0;
  std::vector<PropertyResult> properties;

  bool all_passed() const;
};

/// Faithfulness, monotonicity under appended systems, local channels and partial trace,
/// superadditivity, product additivity, and the two weaving properties, each on
/// `trials` random qubit states.
SuiteReport run_property_suite(const SuiteOptions& options);

}  // namespace weave::cli

#endif  // WEAVE_TOOLS_CLI_PROPERTY_SUITE_H
