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

#include <benchmark/benchmark.h>

#include "cli/random_states.h"
#include "weave/closed_forms.h"
#include "weave/correlations.h"
#include "weave/partitions.h"
#include "weave/states.h"

namespace {

using namespace weave;

void BM_EagerCacheFill(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  cli::StateSampler rng(1);
  const DensityState s = rng.haar_pure(Dims(static_cast<std::size_t>(n), 2));
  for (auto _ : state) {
    SubsetEntropyCache cache(s, CacheFill::eager, workers);
    benchmark::DoNotOptimize(cache.entropy(cache.full_mask() >> 1));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_EagerCacheFill)->ArgsProduct({{6, 8, 10}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_PartitionStream(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PartitionStream stream(n, n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count_partitions(n, n)));
}
BENCHMARK(BM_PartitionStream)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_BruteProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cli::StateSampler rng(2);
  const DensityState s = rng.random_mixed(Dims(static_cast<std::size_t>(n), 2));
  const SubsetEntropyCache cache(s, CacheFill::eager);
  ProfileOptions options;
  options.mode = MinimizationMode::brute;
  for (auto _ : state) benchmark::DoNotOptimize(profile(cache, options).total);
}
BENCHMARK(BM_BruteProfile)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_DickeHalfWeaving(benchmark::State& state) {
  ClosedFormFamily f;
  f.id = ClosedFormId::dicke_half;
  f.n = static_cast<int>(state.range(0));
  const WeightScheme w = WeightScheme::linear(f.n);
  for (auto _ : state) benchmark::DoNotOptimize(cf_weaving(f, w));
}
BENCHMARK(BM_DickeHalfWeaving)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
