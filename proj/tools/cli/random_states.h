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

#ifndef WEAVE_TOOLS_CLI_RANDOM_STATES_H
#define WEAVE_TOOLS_CLI_RANDOM_STATES_H

#include <cstdint>
#include <random>

#include "weave/channel.h"
#include "weave/density_state.h"
#include "weave/partitions.h"
#include "weave/weights.h"

namespace weave::cli {

/// Seeded generators for randomized checks. Same seed, same binary => same sequence.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi);  // inclusive
  double uniform_real(double lo, double hi);

  /// Normalized complex Gaussian vector (Haar-distributed pure state).
  DensityState haar_pure(const Dims& dims);
  /// G G^dag / Tr with G a dim x rank Ginibre matrix; rank 0 means full rank.
  DensityState random_mixed(const Dims& dims, int rank = 0);
  /// Random probability table over all digit strings.
  DensityState random_classical(const Dims& dims);
  /// One of the three above, chosen at random.
  DensityState random_state(const Dims& dims);

  /// Product of independent random states over the blocks of `partition`, with the
  /// subsystems in their natural order.
  DensityState random_product(const Dims& dims, const SetPartition& partition);

  /// Uniformly chosen partition of n elements with blocks of at most max_block.
  SetPartition random_partition(int n, int max_block);

  /// Random CPTP map on `targets` from a random Stinespring isometry with
  /// `num_kraus` operators (0 picks 1..3).
  KrausChannel random_channel(int dim, IndexSet targets, int num_kraus = 0);

  /// omega_k uniform in [0, 2).
  WeightScheme random_omega(int n);
  /// Omega_i uniform in [0, 1), so every omega is nondecreasing.
  WeightScheme random_big_omega(int n);

 private:
  Complex gaussian();

  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace weave::cli

#endif  // WEAVE_TOOLS_CLI_RANDOM_STATES_H
