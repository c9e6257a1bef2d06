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

#ifndef WEAVE_TOOLS_CLI_STATE_FILE_H
#define WEAVE_TOOLS_CLI_STATE_FILE_H

#include <string>
#include <string_view>

#include "weave/density_state.h"

namespace weave::cli {

/// Parses a state document:
///   {"dims": [2, 2], "kind": "pure",      "payload": [[re, im], ...]}
///   {"dims": [2, 2], "kind": "mixed",     "payload": [[[re, im], ...], ...]}
///   {"dims": [2, 2], "kind": "classical", "payload": {"00": 0.5, "11": 0.5}}
/// A mixed payload may also be one flat row-major list of [re, im] pairs. Throws
/// ParseError naming the line (syntax) or field path (structure), and ValidationError
/// when the decoded state is not physical.
DensityState parse_state_document(std::string_view text, const Limits& limits = {});

/// Reads and parses a file; `path` is included in every error message.
DensityState load_state_file(const std::string& path, const Limits& limits = {});

/// Serializes in the representation the state already has.
std::string state_document(const DensityState& s);

}  // namespace weave::cli

#endif  // WEAVE_TOOLS_CLI_STATE_FILE_H
