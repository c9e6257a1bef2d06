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

#ifndef WEAVE_SRC_INDEXING_H
#define WEAVE_SRC_INDEXING_H

#include <cstdint>
#include <span>
#include <vector>

#include "weave/density_state.h"

namespace weave::detail {

inline std::vector<std::uint64_t> strides_of(const Dims& dims) {
  std::vector<std::uint64_t> strides(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * static_cast<std::uint64_t>(dims[i + 1]);
  }
  return strides;
}

// Flat offsets of every digit combination of the listed subsystems, first listed
// subsystem most significant.
inline std::vector<std::uint64_t> offsets_for(const Dims& dims, std::span<const int> which) {
  const auto strides = strides_of(dims);
  std::vector<std::uint64_t> offsets{0};
  for (int idx : which) {
    std::vector<std::uint64_t> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(dims[idx]));
    for (std::uint64_t base : offsets) {
      for (int digit = 0; digit < dims[idx]; ++digit) {
        next.push_back(base + static_cast<std::uint64_t>(digit) * strides[idx]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

inline IndexSet complement_of(int n, std::span<const int> subset) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int i : subset) in[static_cast<std::size_t>(i)] = true;
  IndexSet rest;
  for (int i = 0; i < n; ++i) {
    if (!in[static_cast<std::size_t>(i)]) rest.push_back(i);
  }
  return rest;
}

}  // namespace weave::detail

#endif  // WEAVE_SRC_INDEXING_H
