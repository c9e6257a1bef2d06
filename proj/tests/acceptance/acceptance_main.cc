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

// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "../oracles.h"
#include "../published_values.h"
#include "cli/property_suite.h"
#include "cli/random_states.h"
#include "weave/channel.h"
#include "weave/closed_forms.h"
#include "weave/correlations.h"
#include "weave/partitions.h"
#include "weave/states.h"

using namespace weave;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double worst = 0.0;  // largest deviation seen, where meaningful

  void check(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    const double gap = std::abs(got - want);
    worst = std::max(worst, gap);
    check(gap <= tol, fmt::format("{}: got {:.15g}, want {:.15g} (tol {:g})", what, got, want, tol));
  }
};

CorrelationProfile brute(const DensityState& s) {
  ProfileOptions o;
  o.mode = MinimizationMode::brute;
  return profile(s, o);
}

ClosedFormFamily cf(ClosedFormId id, int n, int d) {
  ClosedFormFamily f;
  f.id = id;
  f.n = n;
  f.d = d;
  return f;
}

bool is_defined(const ClosedFormFamily& f) {
  try {
    validate(f);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

Outcome table_reproduction() {
  Outcome o;
  struct Case {
    int n;
    int d;
    std::vector<ClosedFormId> ids;
  };
  const std::vector<ClosedFormId> qubit_rows{
      ClosedFormId::classical_pair_product, ClosedFormId::classical, ClosedFormId::bell_product,
      ClosedFormId::ghz, ClosedFormId::dicke_1, ClosedFormId::dicke_half};
  const std::vector<ClosedFormId> qudit_rows{ClosedFormId::qudit_classical,
                                             ClosedFormId::qudit_bell_product};
  std::vector<Case> cases;
  for (int n : {2, 4, 6, 8}) cases.push_back({n, 2, qubit_rows});
  for (int n : {4, 6}) cases.push_back({n, 3, qudit_rows});

  int rows = 0;
  for (const Case& c : cases) {
    for (ClosedFormId id : c.ids) {
      const ClosedFormFamily f = cf(id, c.n, c.d);
      if (!is_defined(f)) continue;
      ++rows;
      const std::string tag = fmt::format("{} N={} d={}", closed_form_name(id), c.n, c.d);
      const CorrelationProfile p = brute(make_state(to_state_family(f)));
      const WeightScheme w = WeightScheme::linear(c.n);

      // Published entries against the matrix pipeline.
      for (int k = 2; k < c.n; ++k) {
        std::optional<double> want = table::genuine_below_n(id, c.n, c.d, k);
        if (id == ClosedFormId::dicke_1) {
          want = table::dicke_genuine(table::dicke_one_dist, c.n, k);
        } else if (id == ClosedFormId::dicke_half) {
          want = table::dicke_genuine(table::dicke_half_dist, c.n, k);
        }
        o.near(p.genuine_at(k), *want, 1e-8, tag + fmt::format(" S^{}", k));
      }
      o.near(p.genuine_at(c.n), table::genuine_at_n(id, c.n, c.d), 1e-8, tag + " S^N");
      o.near(p.total, table::total(id, c.n, c.d), 1e-8, tag + " total");
      if (const auto wv = table::weaving(id, c.n, c.d)) {
        o.near(weaving(p, w), *wv, 1e-8, tag + " weaving");
      }

      // Closed-form path against the brute-force minimum.
      for (int k = 1; k <= c.n; ++k) {
        o.near(cf_dist(f, k), p.dist_at(k), 1e-8, tag + fmt::format(" closed-form dist k={}", k));
      }
      for (int k = 2; k <= c.n; ++k) {
        o.near(cf_genuine(f, k), p.genuine_at(k), 1e-8, tag + fmt::format(" closed-form S^{}", k));
      }
      o.near(cf_weaving(f, w), weaving(p, w), 1e-8, tag + " closed-form weaving");
    }
  }
  if (o.pass) o.detail = fmt::format("{} rows, max deviation {:.2e} bits", rows, o.worst);
  return o;
}

Outcome classical_five() {
  Outcome o;
  const DensityState s = make_classical(5);
  const CorrelationProfile p = brute(s);
  const std::vector<double> want{2, 1, 0, 1};
  for (int k = 2; k <= 5; ++k) {
    o.near(p.genuine_at(k), want[static_cast<std::size_t>(k - 2)], 1e-10, fmt::format("S^{}", k));
  }
  const IndexSet keep{0, 1, 2, 3};
  o.near(brute(partial_trace(s, keep)).genuine_at(4), 1.0, 1e-10, "S^4 after tracing one site");
  if (o.pass) o.detail = "genuine (2,1,0,1); S^4 = 1 after tracing one site";
  return o;
}

Outcome dicke_closed_forms() {
  Outcome o;
  double smallest_half = std::numeric_limits<double>::infinity();
  for (int n : {4, 6}) {
    const CorrelationProfile one = brute(make_dicke(n, 1));
    const CorrelationProfile half = brute(make_dicke(n, n / 2));
    for (int k = 2; k <= n; ++k) {
      const double f1 = table::dicke_genuine(table::dicke_one_dist, n, k);
      const double fh = table::dicke_genuine(table::dicke_half_dist, n, k);
      o.near(one.genuine_at(k), f1, 1e-8, fmt::format("f^{}_D,1 N={}", k, n));
      o.near(half.genuine_at(k), fh, 1e-8, fmt::format("f^{}_D,N/2 N={}", k, n));
      o.near(cf_genuine(cf(ClosedFormId::dicke_1, n, 2), k), f1, 1e-8, "closed form f_D,1");
      o.near(cf_genuine(cf(ClosedFormId::dicke_half, n, 2), k), fh, 1e-8, "closed form f_D,N/2");
      o.check(fh > 1e-6, fmt::format("f^{}_D,N/2 N={} = {:g} not > 1e-6", k, n, fh));
      smallest_half = std::min(smallest_half, fh);
    }
  }
  if (o.pass) {
    o.detail = fmt::format("max deviation {:.2e}; min f_D,N/2 = {:.4f}", o.worst, smallest_half);
  }
  return o;
}

Outcome ghz_values() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const CorrelationProfile p = brute(make_ghz(n));
    o.near(p.genuine_at(n), 2.0, 1e-10, fmt::format("S^N N={}", n));
    for (int k = 2; k < n; ++k) {
      const int want = oracle::ceil_div(n, k - 1) - oracle::ceil_div(n, k);
      const double got = p.genuine_at(k);
      o.check(std::lround(got) == want && std::abs(got - want) <= 1e-10,
              fmt::format("S^{} N={}: got {:.15g}, want {}", k, n, got, want));
    }
  }
  if (o.pass) o.detail = "S^N = 2 and integer S^k for N = 3..8";
  return o;
}

Outcome cnot_growth() {
  Outcome o;
  for (int k : {2, 3}) {
    for (double a : {0.3, 0.6, 1.0 / std::sqrt(2.0)}) {
      const DensityState before = make_a_family(k, a);
      const DensityState after = apply_channel(
          tensor_product(before, make_basis_state({2}, {0})), gates::cnot(k - 1, k));
      const double sk = brute(before).genuine_at(k);
      const double sk1 = brute(after).genuine_at(k + 1);
      const std::string tag = fmt::format("k={} a={:.4f}", k, a);
      o.near(sk1, sk, 1e-9, tag + " S^{k+1} after CNOT vs S^k before");
      o.near(sk, 2.0 * oracle::h2(a * a), 1e-9, tag + " common value");
    }
  }
  if (o.pass) o.detail = fmt::format("6 cases, max deviation {:.2e}", o.worst);
  return o;
}

Outcome asymptotic_sweeps() {
  Outcome o;
  auto linear = [](int n) { return WeightScheme::linear(n); };
  const std::vector<int> big{4096};
  const double d1 =
      cf_scaling_sweep(cf(ClosedFormId::dicke_1, 2, 2), big, linear).front().coefficient;
  const double dh =
      cf_scaling_sweep(cf(ClosedFormId::dicke_half, 2, 2), big, linear).front().weaving /
      (4096.0 * 4096.0);
  o.check(std::abs(d1 - 2.61) <= 0.15 * 2.61, fmt::format("dicke-1 weaving/N = {:.4f}", d1));
  o.check(std::abs(dh - 0.01) <= 0.25 * 0.01, fmt::format("dicke-half weaving/N^2 = {:.5f}", dh));

  std::vector<int> ns;
  for (int n = 64; n <= 4096; n *= 2) ns.push_back(n);
  const auto ghz = cf_scaling_sweep(cf(ClosedFormId::ghz, 2, 2), ns, linear);
  for (std::size_t i = 1; i < ghz.size(); ++i) {
    const double prev = ghz[i - 1].weaving / ghz[i - 1].n;
    const double cur = ghz[i].weaving / ghz[i].n;
    o.check(cur > prev, fmt::format("ghz weaving/N not increasing at N={}", ghz[i].n));
  }
  if (o.pass) {
    o.detail = fmt::format("dicke-1 {:.4f} N, dicke-half {:.5f} N^2, ghz weaving/N {:.3f} -> {:.3f}",
                           d1, dh, ghz.front().weaving / 64.0, ghz.back().weaving / 4096.0);
  }
  return o;
}

Outcome property_suite() {
  Outcome o;
  cli::SuiteOptions options;
  options.trials = 200;
  options.max_n = 4;
  options.tolerance = 1e-8;
  const cli::SuiteReport r = cli::run_property_suite(options);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& p : r.properties) {
    o.check(p.trials >= 200, p.name + " ran fewer than 200 trials");
    o.check(p.passed, fmt::format("{} worst margin {:.3e}", p.name, p.worst_margin));
    worst = std::min(worst, p.worst_margin);
  }
  if (o.pass) {
    o.detail = fmt::format("{} properties x {} trials, worst margin {:.2e}", r.properties.size(),
                           options.trials, worst);
  }
  return o;
}

Outcome neural_complexity_checks() {
  Outcome o;
  cli::StateSampler rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityState rho2 = rng.random_state({2, 2});
    const DensityState rho1 = rng.random_state({2});
    const double c2 = neural_complexity(SubsetEntropyCache(rho2));
    const DensityState joint = tensor_product(rho2, rho1);
    o.near(neural_complexity(SubsetEntropyCache(joint)), 4.0 / 3.0 * c2, 1e-9,
           fmt::format("trial {}", trial));
  }
  const double ratio_worst = o.worst;
  for (int n = 2; n <= 6; ++n) {
    std::vector<IndexSet> singles;
    for (int i = 0; i < n; ++i) singles.push_back({i});
    const DensityState product =
        rng.random_product(Dims(static_cast<std::size_t>(n), 2), SetPartition(n, singles));
    o.near(neural_complexity(SubsetEntropyCache(product)), 0.0, 1e-10,
           fmt::format("product of {} singletons", n));
  }
  if (o.pass) o.detail = fmt::format("50 states, max deviation {:.2e}", ratio_worst);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  cli::StateSampler rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const Dims dims = trial % 4 == 3 ? Dims{2, 3, 2, 2} : Dims{2, 2, 2, 2};
    const DensityState s = rng.random_state(dims);
    const Matrix rho = s.to_matrix();
    const SubsetEntropyCache cache(s, CacheFill::eager);
    for (int k = 1; k <= 4; ++k) {
      o.near(dist_to_pk(cache, k, MinimizationMode::brute).bits, oracle::dist_to_pk(rho, dims, k),
             1e-10, fmt::format("trial {} k={}", trial, k));
    }
  }
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::uint64_t streamed = 0;
      PartitionStream stream(n, k);
      while (stream.next()) ++streamed;
      o.check(count_partitions(n, k) == streamed,
              fmt::format("count_partitions({}, {}) = {} but enumeration gives {}", n, k,
                          count_partitions(n, k), streamed));
    }
  }
  if (o.pass) {
    o.detail = fmt::format("20 states, max deviation {:.2e}; counts match for N <= 10", o.worst);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"finite-N table reproduction", table_reproduction},
      {"classical five-bit worked example", classical_five},
      {"Dicke closed forms", dicke_closed_forms},
      {"GHZ values", ghz_values},
      {"CNOT growth", cnot_growth},
      {"asymptotic sweeps", asymptotic_sweeps},
      {"property suite", property_suite},
      {"neural complexity", neural_complexity_checks},
      {"oracle equivalence", oracle_equivalence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::printf("%s  %zu. %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, outcome.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
