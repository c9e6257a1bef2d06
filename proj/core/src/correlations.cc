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

#include "weave/correlations.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <future>
#include <limits>
#include <numeric>
#include <string>

#include "weave/errors.h"

namespace weave {
namespace {

double clamp_noise(double value, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -tol::kClamp) return 0.0;
  throw ConsistencyError(std::string(what) + " is negative beyond tolerance: " +
                         std::to_string(value));
}

bool unchanged_by(const DensityState& s, std::span<const int> perm, const Limits& limits) {
  const DensityState moved = permute_subsystems(s, perm);
  if (s.representation() == Representation::pure) {
    const Vector& a = s.amplitudes();
    const Vector& b = moved.amplitudes();
    const Complex overlap = b.dot(a);  // <b|a>
    if (std::abs(overlap) < 0.5) return false;
    const Complex phase = overlap / std::abs(overlap);
    return (a - phase * b).cwiseAbs().maxCoeff() <= tol::kSymmetry;
  }
  return max_abs_difference(s, moved, limits) <= tol::kSymmetry;
}

}  // namespace

double CorrelationProfile::dist_at(int k) const {
  if (k < 1 || k > n) throw ArgumentError("dist_at: k out of range");
  return dist[static_cast<std::size_t>(k - 1)];
}

double CorrelationProfile::genuine_at(int k) const {
  if (k < 2 || k > n) throw ArgumentError("genuine_at: k out of range");
  return genuine[static_cast<std::size_t>(k - 2)];
}

bool is_permutation_invariant(const DensityState& s, const Limits& limits) {
  if (s.permutation_invariance_hint()) return true;
  const int n = s.num_subsystems();
  if (n == 1) return true;
  const Dims& dims = s.dims();
  if (std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) != dims.end()) {
    return false;
  }
  IndexSet swap(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  if (!unchanged_by(s, swap, limits)) return false;
  if (n == 2) return true;
  IndexSet cycle(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) cycle[static_cast<std::size_t>(j)] = (j + 1) % n;
  return unchanged_by(s, cycle, limits);
}

double product_distance(const SubsetEntropyCache& cache, const SetPartition& partition) {
  if (partition.size() != cache.num_subsystems()) {
    throw ArgumentError("partition size differs from the number of subsystems");
  }
  double sum = 0.0;
  for (SubsetMask m : partition.block_masks()) sum += cache.entropy(m);
  return sum - cache.entropy(cache.full_mask());
}

namespace {

// Resolves automatic mode and rejects the fast path for asymmetric states. Returns true
// when the compact partition is to be used.
bool use_fast_path(const DensityState& s, MinimizationMode mode, const Limits& limits) {
  switch (mode) {
    case MinimizationMode::brute:
      return false;
    case MinimizationMode::automatic:
      return is_permutation_invariant(s, limits);
    case MinimizationMode::symmetric_fast:
      if (!is_permutation_invariant(s, limits)) {
        throw ArgumentError("symmetric fast path requires a permutation-invariant state");
      }
      return true;
  }
  return false;
}

DistResult minimize(const SubsetEntropyCache& cache, int k, bool fast, const Limits& limits) {
  const int n = cache.num_subsystems();
  if (k < 1 || k > n) throw ArgumentError("dist_to_pk needs 1 <= k <= N");
  if (k == n) return {0.0, compact_partition(n, n)};

  if (fast) {
    SetPartition compact = compact_partition(n, k);
    const double value = product_distance(cache, compact);
    return {clamp_noise(value, "distance"), std::move(compact)};
  }

  PartitionStream stream(n, k, limits);
  const double global = cache.entropy(cache.full_mask());
  double best = std::numeric_limits<double>::infinity();
  SetPartition best_partition;
  while (stream.next()) {
    double sum = 0.0;
    for (SubsetMask m : stream.block_masks()) sum += cache.entropy(m);
    // Ties go to the earliest partition; noise-level improvements do not count.
    if (sum < best - 1e-12) {
      best = sum;
      best_partition = stream.current();
    }
  }
  return {clamp_noise(best - global, "distance"), std::move(best_partition)};
}

}  // namespace

DistResult dist_to_pk(const SubsetEntropyCache& cache, int k, MinimizationMode mode,
                      const Limits& limits) {
  const int n = cache.num_subsystems();
  if (k < 1 || k > n) throw ArgumentError("dist_to_pk needs 1 <= k <= N");
  if (k == n) return {0.0, compact_partition(n, n)};
  return minimize(cache, k, use_fast_path(cache.state(), mode, limits), limits);
}

CorrelationProfile profile(const SubsetEntropyCache& cache, const ProfileOptions& options) {
  const int n = cache.num_subsystems();
  CorrelationProfile p;
  p.n = n;
  p.dist.assign(static_cast<std::size_t>(n), 0.0);
  p.argmin.resize(static_cast<std::size_t>(n));

  const bool fast = use_fast_path(cache.state(), options.mode, options.limits);
  auto evaluate = [&](int k) {
    DistResult r = minimize(cache, k, fast, options.limits);
    p.dist[static_cast<std::size_t>(k - 1)] = r.bits;
    p.argmin[static_cast<std::size_t>(k - 1)] = std::move(r.argmin);
  };

  if (options.workers > 1 && n > 2) {
    std::vector<std::future<void>> tasks;
    for (int k = 1; k <= n; ++k) tasks.push_back(std::async(std::launch::async, evaluate, k));
    for (auto& t : tasks) t.get();
  } else {
    for (int k = 1; k <= n; ++k) evaluate(k);
  }

  p.genuine.reserve(static_cast<std::size_t>(std::max(0, n - 1)));
  for (int k = 2; k <= n; ++k) {
    const double diff = p.dist[static_cast<std::size_t>(k - 2)] - p.dist[static_cast<std::size_t>(k - 1)];
    p.genuine.push_back(clamp_noise(diff, "genuine correlation"));
  }
  p.total = p.dist.front();
  return p;
}

CorrelationProfile profile(const DensityState& s, const ProfileOptions& options) {
  const SubsetEntropyCache cache(s, CacheFill::automatic, options.workers, options.limits);
  return profile(cache, options);
}

WeavingForms weaving_forms(const CorrelationProfile& p, const WeightScheme& w) {
  if (w.n() != p.n) {
    throw ArgumentError("weight scheme sized for N = " + std::to_string(w.n()) +
                        " applied to N = " + std::to_string(p.n));
  }
  WeavingForms forms;
  for (int k = 2; k <= p.n; ++k) forms.by_genuine += w.omega(k) * p.genuine_at(k);
  for (int k = 1; k <= p.n - 1; ++k) forms.by_dist += w.big_omega(k) * p.dist_at(k);
  return forms;
}

double weaving(const CorrelationProfile& p, const WeightScheme& w) {
  const WeavingForms forms = weaving_forms(p, w);
  const double scale = std::max(1.0, std::abs(forms.by_genuine));
  if (std::abs(forms.by_genuine - forms.by_dist) > 1e-9 * scale) {
    throw ConsistencyError("weaving forms disagree: " + std::to_string(forms.by_genuine) +
                           " vs " + std::to_string(forms.by_dist));
  }
  return forms.by_genuine;
}

double multi_information(const SubsetEntropyCache& cache, SubsetMask cluster) {
  if (cluster == 0) throw ArgumentError("multi_information needs a nonempty cluster");
  return clamp_noise(cache.single_site_sum(cluster) - cache.entropy(cluster),
                     "multi-information");
}

double multi_information(const SubsetEntropyCache& cache, std::span<const int> cluster) {
  return multi_information(cache, mask_of(cluster));
}

double neural_complexity(const SubsetEntropyCache& cache, const Limits& limits) {
  const int n = cache.num_subsystems();
  if (n > limits.max_enumeration_n) {
    throw CapacityError("neural complexity enumerates all subsets; capped at n = " +
                        std::to_string(limits.max_enumeration_n));
  }
  if (n == 1) return 0.0;
  const SubsetMask full = cache.full_mask();
  const double whole = multi_information(cache, full);

  std::vector<double> sums(static_cast<std::size_t>(n), 0.0);
  std::vector<double> counts(static_cast<std::size_t>(n), 0.0);
  for (SubsetMask m = 1; m < full; ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    sums[size] += multi_information(cache, m);
    counts[size] += 1.0;
  }
  double c = 0.0;
  for (int k = 1; k <= n - 1; ++k) {
    const auto i = static_cast<std::size_t>(k);
    c += static_cast<double>(k) / n * whole - sums[i] / counts[i];
  }
  return c;
}

DensityState product_of_marginals(const DensityState& s, const SetPartition& partition,
                                  const Limits& limits) {
  if (partition.size() != s.num_subsystems()) {
    throw ArgumentError("partition size differs from the number of subsystems");
  }
  const auto& blocks = partition.blocks();
  DensityState acc = partial_trace(s, blocks.front(), limits);
  IndexSet order = blocks.front();
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    acc = tensor_product(acc, partial_trace(s, blocks[b], limits), limits);
    order.insert(order.end(), blocks[b].begin(), blocks[b].end());
  }
  IndexSet perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  }
  return permute_subsystems(acc, perm);
}

}  // namespace weave
