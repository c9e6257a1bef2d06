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

#include "weave/entropy_cache.h"

#include <algorithm>
#include <exception>
#include <future>
#include <mutex>
#include <unordered_map>

#include "weave/errors.h"

namespace weave {

struct SubsetEntropyCache::LazyStore {
  std::mutex mutex;
  std::unordered_map<SubsetMask, double> values;
};

SubsetEntropyCache::SubsetEntropyCache(const DensityState& state, CacheFill fill, int workers,
                                       const Limits& limits)
    : state_(&state) {
  const int n = state.num_subsystems();
  const bool eager =
      fill == CacheFill::eager || (fill == CacheFill::automatic && n <= limits.eager_cache_max_n);
  if (!eager) {
    lazy_ = std::make_unique<LazyStore>();
    return;
  }
  if (n > limits.max_enumeration_n) {
    throw CapacityError("eager entropy cache capped at n = " +
                        std::to_string(limits.max_enumeration_n));
  }

  const SubsetMask count = SubsetMask{1} << n;
  const SubsetMask full = count - 1;
  const bool pure = state.representation() == Representation::pure;
  table_.assign(static_cast<std::size_t>(count), 0.0);

  // Each worker owns masks congruent to its id; for pure states S(A) = S(complement)
  // and the smaller mask of each pair is computed.
  auto work = [&](int id, int stride) {
    for (SubsetMask m = static_cast<SubsetMask>(id); m < count; m += static_cast<SubsetMask>(stride)) {
      if (pure) {
        const SubsetMask other = full & ~m;
        if (other < m) continue;
        const double s = marginal_entropy(state, m);
        table_[m] = s;
        table_[other] = s;
      } else {
        table_[m] = marginal_entropy(state, m);
      }
    }
  };

  const int threads = std::clamp(workers, 1, 64);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> tasks;
    tasks.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) tasks.push_back(std::async(std::launch::async, work, t, threads));
    for (auto& task : tasks) task.get();
  }
}

SubsetEntropyCache::~SubsetEntropyCache() = default;
SubsetEntropyCache::SubsetEntropyCache(SubsetEntropyCache&&) noexcept = default;
SubsetEntropyCache& SubsetEntropyCache::operator=(SubsetEntropyCache&&) noexcept = default;

SubsetMask SubsetEntropyCache::full_mask() const {
  const int n = num_subsystems();
  return n == 64 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

double SubsetEntropyCache::entropy(SubsetMask subset) const {
  if ((subset & ~full_mask()) != 0) throw ArgumentError("subset mask outside the state");
  if (subset == 0) return 0.0;
  if (!table_.empty()) return table_[subset];

  {
    std::lock_guard<std::mutex> lock(lazy_->mutex);
    if (auto it = lazy_->values.find(subset); it != lazy_->values.end()) return it->second;
  }
  const double s = marginal_entropy(*state_, subset);
  std::lock_guard<std::mutex> lock(lazy_->mutex);
  lazy_->values.emplace(subset, s);
  return s;
}

double SubsetEntropyCache::single_site_sum(SubsetMask subset) const {
  double sum = 0.0;
  for (int i = 0; subset != 0; ++i, subset >>= 1) {
    if (subset & 1U) sum += entropy(SubsetMask{1} << i);
  }
  return sum;
}

}  // namespace weave
