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

#include "cli/property_suite.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cli/random_states.h"
#include "weave/correlations.h"

namespace weave::cli {
namespace {

class Checker {
 public:
  Checker(std::string name, const SuiteOptions& options, std::uint64_t salt)
      : options_(options), sampler_(options.seed * 0x9E3779B97F4A7C15ULL + salt) {
    result_.name = std::move(name);
    result_.worst_margin = std::numeric_limits<double>::infinity();
  }

  StateSampler& sampler() { return sampler_; }

  void at_most(double lhs, double rhs) { record(rhs - lhs); }
  void equal(double a, double b) { record(-std::abs(a - b)); }
  void record(double margin) { result_.worst_margin = std::min(result_.worst_margin, margin); }

  /// Filtered S^{k->N} for k = 1..N (index k-1); k >= N reads as 0.
  std::vector<double> dists(const DensityState& s) const {
    const SubsetEntropyCache cache(s, CacheFill::eager);
    ProfileOptions po;
    po.mode = MinimizationMode::brute;
    const CorrelationProfile p = profile(cache, po);
    std::vector<double> out = p.dist;
    for (double& v : out) v = filter(v);
    return out;
  }

  double dist(const std::vector<double>& all, int k) const {
    if (k >= static_cast<int>(all.size())) return filter(0.0);
    return all[static_cast<std::size_t>(k - 1)];
  }

  double filter(double v) const { return options_.dist_filter ? options_.dist_filter(v) : v; }

  PropertyResult finish(int trials) {
    result_.trials = trials;
    if (!std::isfinite(result_.worst_margin)) result_.worst_margin = 0.0;
    result_.passed = result_.worst_margin >= -options_.tolerance;
    return result_;
  }

 private:
  const SuiteOptions& options_;
  StateSampler sampler_;
  PropertyResult result_;
};

Dims qubits(int n) { return Dims(static_cast<std::size_t>(n), 2); }

DensityState apply_local_channels(StateSampler& rng, const DensityState& s) {
  DensityState out = s;
  for (int site = 0; site < s.num_subsystems(); ++site) {
    out = apply_channel(out, rng.random_channel(s.dims()[static_cast<std::size_t>(site)], {site}));
  }
  return out;
}

double filtered_weaving(const Checker& c, const std::vector<double>& dist, const WeightScheme& w) {
  double sum = 0.0;
  for (int k = 1; k <= w.n() - 1; ++k) sum += w.big_omega(k) * c.dist(dist, k);
  return sum;
}

PropertyResult faithfulness(const SuiteOptions& o) {
  Checker c("faithfulness-0S", o, 1);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int n = rng.uniform_int(2, o.max_n);
    const int k = rng.uniform_int(1, n - 1);
    const bool producible = t % 2 == 0;
    const DensityState s = producible
                               ? rng.random_product(qubits(n), rng.random_partition(n, k))
                               : rng.random_state(qubits(n));
    const SubsetEntropyCache cache(s, CacheFill::eager);
    const DistResult r = dist_to_pk(cache, k, MinimizationMode::brute);
    const double d = c.filter(r.bits);
    const DensityState closest = product_of_marginals(s, r.argmin);
    const double gap = max_abs_difference(s, closest);

    c.at_most(0.0, d);
    // The reported distance is the relative entropy to the reconstructed product.
    c.equal(d, relative_entropy(s, closest));
    if (producible) {
      c.at_most(d, 0.0);
      c.at_most(gap, o.tolerance);
    } else if ((d > o.tolerance) != (gap > o.tolerance)) {
      c.record(-1.0);
    }
  }
  return c.finish(o.trials);
}

PropertyResult appended_system(const SuiteOptions& o) {
  Checker c("monotonicity-1S", o, 2);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int n = rng.uniform_int(2, o.max_n);
    const int added = rng.uniform_int(1, std::min(2, n));
    const DensityState s = rng.random_state(qubits(n));
    const DensityState extra = rng.random_state(qubits(added));
    c.at_most(c.dist(c.dists(tensor_product(s, extra)), added), c.dist(c.dists(s), added));
  }
  return c.finish(o.trials);
}

PropertyResult local_channels(const SuiteOptions& o) {
  Checker c("monotonicity-2S", o, 3);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int n = rng.uniform_int(2, o.max_n);
    const DensityState s = rng.random_state(qubits(n));
    const auto before = c.dists(s);
    const auto after = c.dists(apply_local_channels(rng, s));
    for (int k = 1; k <= n; ++k) c.at_most(c.dist(after, k), c.dist(before, k));
  }
  return c.finish(o.trials);
}

PropertyResult partial_traces(const SuiteOptions& o) {
  Checker c("monotonicity-3D", o, 4);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int n = rng.uniform_int(3, std::max(3, o.max_n));
    const DensityState s = rng.random_state(qubits(n));
    IndexSet sites(static_cast<std::size_t>(n));
    std::iota(sites.begin(), sites.end(), 0);
    std::shuffle(sites.begin(), sites.end(), std::mt19937_64(static_cast<std::uint64_t>(t) + o.seed));
    const int kept = rng.uniform_int(2, n - 1);
    sites.resize(static_cast<std::size_t>(kept));
    const auto before = c.dists(s);
    const auto after = c.dists(partial_trace(s, sites));
    for (int k = 1; k < kept; ++k) c.at_most(c.dist(after, k), c.dist(before, k));
  }
  return c.finish(o.trials);
}

PropertyResult superadditivity(const SuiteOptions& o) {
  Checker c("superadditivity-5S", o, 5);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int n = rng.uniform_int(2, o.max_n);
    const SetPartition clusters = rng.random_partition(n, n);
    auto cluster_sum = [&](const SubsetEntropyCache& cache) {
      double sum = 0.0;
      for (SubsetMask m : clusters.block_masks()) sum += multi_information(cache, m);
      return sum;
    };
    const DensityState s = rng.random_state(qubits(n));
    const SubsetEntropyCache cache(s, CacheFill::eager);
    c.at_most(cluster_sum(cache), c.filter(multi_information(cache, cache.full_mask())));

    const DensityState product = rng.random_product(qubits(n), clusters);
    const SubsetEntropyCache pcache(product, CacheFill::eager);
    c.equal(cluster_sum(pcache), c.filter(multi_information(pcache, pcache.full_mask())));
  }
  return c.finish(o.trials);
}

PropertyResult product_additivity(const SuiteOptions& o) {
  Checker c("product-additivity", o, 6);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int na = rng.uniform_int(1, std::min(3, o.max_n));
    const int nb = rng.uniform_int(1, std::min(3, o.max_n));
    const DensityState a = rng.random_state(qubits(na));
    const DensityState b = rng.random_state(qubits(nb));
    const auto da = c.dists(a);
    const auto db = c.dists(b);
    const auto dab = c.dists(tensor_product(a, b));
    for (int k = 1; k <= na + nb; ++k) c.equal(c.dist(dab, k), c.dist(da, k) + c.dist(db, k));
  }
  return c.finish(o.trials);
}

PropertyResult weaving_dual_form(const SuiteOptions& o) {
  Checker c("weaving-dual-form", o, 7);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int n = rng.uniform_int(2, o.max_n);
    const DensityState s = rng.random_state(qubits(n));
    ProfileOptions po;
    po.mode = MinimizationMode::brute;
    const WeavingForms forms = weaving_forms(profile(s, po), rng.random_omega(n));
    // Tighter than the suite tolerance: the two sums are algebraically identical.
    c.record(std::min(0.0, 1e-9 - std::abs(forms.by_genuine - forms.by_dist)));
  }
  return c.finish(o.trials);
}

PropertyResult weaving_contractivity(const SuiteOptions& o) {
  Checker c("weaving-contractivity", o, 8);
  auto& rng = c.sampler();
  for (int t = 0; t < o.trials; ++t) {
    const int n = rng.uniform_int(2, o.max_n);
    const DensityState s = rng.random_state(qubits(n));
    const WeightScheme w = t % 2 == 0 ? WeightScheme::linear(n) : rng.random_big_omega(n);
    const double before = filtered_weaving(c, c.dists(s), w);
    const double after = filtered_weaving(c, c.dists(apply_local_channels(rng, s)), w);
    c.at_most(after, before);
  }
  return c.finish(o.trials);
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

SuiteReport run_property_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  report.tolerance = options.tolerance;
  report.properties = {
      faithfulness(options),       appended_system(options),   local_channels(options),
      partial_traces(options),     superadditivity(options),   product_additivity(options),
      weaving_dual_form(options),  weaving_contractivity(options),
  };
  return report;
}

}  // namespace weave::cli
