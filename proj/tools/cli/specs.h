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

#ifndef WEAVE_TOOLS_CLI_SPECS_H
#define WEAVE_TOOLS_CLI_SPECS_H

#include <optional>
#include <string>
#include <string_view>

#include "weave/correlations.h"
#include "weave/states.h"
#include "weave/weights.h"

namespace weave::cli {

/// A `--state` argument: either a family spec such as "ghz:4" or "dicke:6:3", or a path.
struct StateSpec {
  std::optional<StateFamily> family;
  std::string path;
  std::string label;  // family spec as given, or the path
};

/// Family specs:
///   ghz:N[:d]  classical:N[:d]  bell-product:N[:d]  classical-pair-product:N
///   dicke:N:m  a-family:N:a  qudit-classical:N:d  qudit-bell-product:N:d
/// Anything whose prefix is not a family name is taken as a file path.
StateSpec parse_state_spec(std::string_view text);

/// Weights for N subsystems: "k-1", "uniform", "delta:K", or "file:PATH" where the file
/// holds {"omega": [w_2..w_N]}, {"big_omega": [W_1..W_{N-1}]}, or a bare omega list.
WeightScheme parse_weights(std::string_view text, int n);

/// "auto", "brute", or "fast".
MinimizationMode parse_mode(std::string_view text);
std::string mode_name(MinimizationMode mode);

}  // namespace weave::cli

#endif  // WEAVE_TOOLS_CLI_SPECS_H
