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

#ifndef WEAVE_ENTROPY_CACHE_H
#define WEAVE_ENTROPY_CACHE_H

#include <memory>
#include <span>
#include <vector>

#include "weave/density_state.h"
#include "weave/limits.h"

namespace weave {

enum class CacheFill {
  eager,      // all 2^N subsets computed at construction
  lazy,       // computed on first lookup
  automatic,  // eager when N <= Limits::eager_cache_max_n
};

/// Marginal von Neumann entropies (bits) of a fixed state, keyed by subset mask.
///
/// The cache holds a pointer to the state, which must outlive it. Eager fill may run on
/// `workers` threads; afterwards lookups are read-only. Lazy lookups are serialized by
/// an internal lock, so a lazy cache can also be shared across threads.
class SubsetEntropyCache {
 public:
  explicit SubsetEntropyCache(const DensityState& state, CacheFill fill = CacheFill::automatic,
                              int workers = 1, const Limits& limits = {});
  ~SubsetEntropyCache();
  SubsetEntropyCache(SubsetEntropyCache&&) noexcept;
  SubsetEntropyCache& operator=(SubsetEntropyCache&&) noexcept;

  const DensityState& state() const { return *state_; }
  int num_subsystems() const { return state_->num_subsystems(); }
  bool is_eager() const { return !table_.empty(); }
  SubsetMask full_mask() const;

  double entropy(SubsetMask subset) const;
  double entropy(std::span<const int> subset) const { return entropy(mask_of(subset)); }

  /// Sum of single-site entropies over the subset.
  double single_site_sum(SubsetMask subset) const;

 private:
  struct LazyStore;

  const DensityState* state_;
  std::vector<double> table_;
  std::unique_ptr<LazyStore> lazy_;
};

}  // namespace weave

#endif  // WEAVE_ENTROPY_CACHE_H
