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

#ifndef WEAVE_LIMITS_H
#define WEAVE_LIMITS_H

#include <cstdint>

namespace weave {

/// Size caps shared by the dense linear algebra and the partition search.
struct Limits {
  /// Largest total Hilbert-space dimension held as a dense matrix (~12 qubits).
  std::uint64_t max_dense_dim = 4096;
  /// Largest amplitude vector (~20 qubits). Pure marginals only ever diagonalize the
  /// smaller of the two Gram matrices, so this can exceed max_dense_dim.
  std::uint64_t max_pure_dim = std::uint64_t{1} << 20;
  /// Largest N for which partitions (and all 2^N subsets) are enumerated.
  int max_enumeration_n = 14;
  /// Subset-entropy caches fill all 2^N entries up front at or below this N.
  int eager_cache_max_n = 10;
};

namespace tol {

inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPositivity = 1e-10;
inline constexpr double kPureNorm = 1e-12;
inline constexpr double kProbabilitySum = 1e-12;
inline constexpr double kKrausCompleteness = 1e-10;
/// Eigenvalues below this contribute 0 to -x log x.
inline constexpr double kEigenClip = 1e-12;
/// rho-weight above this on a null eigenvector of sigma makes S(rho||sigma) infinite.
inline constexpr double kSupportWeight = 1e-9;
/// Negative correlation values within this band are floating noise and clamp to 0.
inline constexpr double kClamp = 1e-9;
/// Permutation-invariance detection for custom states.
inline constexpr double kSymmetry = 1e-10;

}  // namespace tol
}  // namespace weave

#endif  // WEAVE_LIMITS_H
