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

#ifndef WEAVE_CORRELATIONS_H
#define WEAVE_CORRELATIONS_H

#include <optional>
#include <span>
#include <vector>

#include "weave/density_state.h"
#include "weave/entropy_cache.h"
#include "weave/limits.h"
#include "weave/partitions.h"
#include "weave/weights.h"

namespace weave {

/// How the minimum over partitions is searched.
enum class MinimizationMode {
  brute,           // every partition with blocks <= k
  symmetric_fast,  // compact partition only; state must be permutation invariant
  automatic,       // symmetric_fast when the state is permutation invariant, else brute
};

/// Distance to the set of products over partitions with blocks of at most k subsystems,
/// together with the first minimizing partition in enumeration order.
struct DistResult {
  double bits = 0.0;
  SetPartition argmin;
};

/// All correlation orders of one state, in bits.
struct CorrelationProfile {
  int n = 0;
  /// dist[k-1] = S^{k->N}, the correlations of order higher than k, k = 1..N.
  std::vector<double> dist;
  /// genuine[k-2] = S^k = dist(k-1) - dist(k), k = 2..N.
  std::vector<double> genuine;
  /// S^{1->N}.
  double total = 0.0;
  /// Minimizing partition for each k = 1..N.
  std::vector<SetPartition> argmin;

  double dist_at(int k) const;
  double genuine_at(int k) const;
};

struct ProfileOptions {
  MinimizationMode mode = MinimizationMode::automatic;
  /// Threads for cache fill and for evaluating different k.
  int workers = 1;
  Limits limits;
};

/// True when the state is flagged symmetric by its constructor, or when it has equal
/// local dimensions and is unchanged (within tol::kSymmetry) by the transposition (0 1)
/// and the cycle (0 1 ... N-1), which together generate the symmetric group.
bool is_permutation_invariant(const DensityState& s, const Limits& limits = {});

/// min over partitions with blocks of size <= k of sum_blocks S(block) - S(state).
/// Negative values within tol::kClamp clamp to 0.
DistResult dist_to_pk(const SubsetEntropyCache& cache, int k,
                      MinimizationMode mode = MinimizationMode::automatic,
                      const Limits& limits = {});

/// Sum of block entropies minus the global entropy, for a fixed partition.
double product_distance(const SubsetEntropyCache& cache, const SetPartition& partition);

CorrelationProfile profile(const SubsetEntropyCache& cache, const ProfileOptions& options = {});
CorrelationProfile profile(const DensityState& s, const ProfileOptions& options = {});

/// The two algebraic routes for a weaving measure.
struct WeavingForms {
  double by_genuine = 0.0;  // sum_{k=2}^{N} omega_k S^k
  double by_dist = 0.0;     // sum_{k=1}^{N-1} Omega_k S^{k->N}
};

WeavingForms weaving_forms(const CorrelationProfile& p, const WeightScheme& w);

/// Weaving in bits (the genuine-correlation form). Throws ConsistencyError if the two
/// forms disagree by more than 1e-9 (relative to max(1, |W|)).
double weaving(const CorrelationProfile& p, const WeightScheme& w);

/// Sum of single-site entropies in the cluster minus the cluster entropy.
double multi_information(const SubsetEntropyCache& cache, std::span<const int> cluster);
double multi_information(const SubsetEntropyCache& cache, SubsetMask cluster);

/// sum_{k=1}^{N-1} [ k/N * I(all) - <I(cluster)>_{|cluster| = k} ], averaged over all
/// binom(N, k) clusters, with I the multi-information.
double neural_complexity(const SubsetEntropyCache& cache, const Limits& limits = {});

/// Tensor product of the state's own block marginals, reordered to the original
/// subsystem order.
DensityState product_of_marginals(const DensityState& s, const SetPartition& partition,
                                  const Limits& limits = {});

}  // namespace weave

#endif  // WEAVE_CORRELATIONS_H
