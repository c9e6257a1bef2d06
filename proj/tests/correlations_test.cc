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

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"

#include "cli/random_states.h"
#include "oracles.h"
#include "weave/channel.h"
#include "weave/correlations.h"
#include "weave/errors.h"
#include "weave/states.h"

using namespace weave;

namespace {

CorrelationProfile brute_profile(const DensityState& s) {
  ProfileOptions o;
  o.mode = MinimizationMode::brute;
  return profile(s, o);
}

CorrelationProfile fast_profile(const DensityState& s) {
  ProfileOptions o;
  o.mode = MinimizationMode::symmetric_fast;
  return profile(s, o);
}

void expect_vector_near(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "index " << i;
}

}  // namespace

TEST(correlations, dist_matches_oracle_on_random_states) {
  cli::StateSampler rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const Dims dims = trial % 3 == 0 ? Dims{2, 3, 2} : Dims{2, 2, 2, 2};
    const DensityState s = rng.random_state(dims);
    expect_vector_near(brute_profile(s).dist, oracle::dists(s.to_matrix(), dims), 1e-9);
  }
}

TEST(correlations, ghz_values) {
  const CorrelationProfile p = brute_profile(make_ghz(4));
  expect_vector_near(p.dist, {4, 2, 2, 0}, 1e-10);
  expect_vector_near(p.genuine, {2, 0, 2}, 1e-10);
  EXPECT_NEAR(p.total, 4.0, 1e-10);
  EXPECT_EQ(p.argmin[1].to_string(), "{1,2}{3,4}");
}

TEST(correlations, classical_five_worked_example) {
  const CorrelationProfile p = brute_profile(make_classical(5));
  expect_vector_near(p.genuine, {2, 1, 0, 1}, 1e-10);
  EXPECT_NEAR(p.total, 4.0, 1e-10);
  const IndexSet keep{0, 1, 2, 3};
  EXPECT_NEAR(brute_profile(partial_trace(make_classical(5), keep)).genuine_at(4), 1.0, 1e-10);
}

TEST(correlations, bell_product_values) {
  const CorrelationProfile p = brute_profile(make_bell_product(4));
  expect_vector_near(p.dist, {4, 0, 0, 0}, 1e-10);
  EXPECT_EQ(p.argmin[1].to_string(), "{1,2}{3,4}");
  EXPECT_NEAR(weaving(p, WeightScheme::linear(4)), 4.0, 1e-10);
}

TEST(correlations, dicke_half_has_every_order) {
  const CorrelationProfile p = brute_profile(make_dicke(4, 2));
  EXPECT_NEAR(p.genuine_at(4), 2.0, 1e-10);
  EXPECT_GT(p.genuine_at(2), 1e-6);
  EXPECT_GT(p.genuine_at(3), 1e-6);
}

TEST(correlations, fast_path_equals_brute_force) {
  for (int n = 2; n <= 8; ++n) {
    std::vector<DensityState> states{make_ghz(n), make_classical(n), make_dicke(n, 1),
                                     make_dicke(n, n / 2)};
    for (const DensityState& s : states) {
      expect_vector_near(fast_profile(s).dist, brute_profile(s).dist, 1e-9);
    }
  }
}

TEST(correlations, fast_mode_rejects_asymmetric_state) {
  const DensityState s = make_bell_product(4);
  EXPECT_FALSE(is_permutation_invariant(s));
  EXPECT_THROW(fast_profile(s), ArgumentError);
}

TEST(correlations, symmetry_detection_without_hint) {
  const DensityState ghz = make_ghz(4).with_permutation_invariance_hint(false);
  EXPECT_TRUE(is_permutation_invariant(ghz));
  const DensityState dicke = make_dicke(5, 2).with_permutation_invariance_hint(false);
  EXPECT_TRUE(is_permutation_invariant(dicke));
  EXPECT_FALSE(is_permutation_invariant(make_basis_state({2, 2, 2}, {0, 0, 1})));
  // Invariant under the full cycle but not under swapping the first two sites.
  Vector psi = Vector::Zero(8);
  const Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
  psi(0b001) = 1.0;
  psi(0b010) = w;
  psi(0b100) = w * w;
  psi /= std::sqrt(3.0);
  EXPECT_FALSE(is_permutation_invariant(DensityState::from_amplitudes({2, 2, 2}, psi)));
}

TEST(correlations, automatic_mode_uses_argmin_of_compact_partition) {
  const CorrelationProfile p = profile(make_ghz(5));
  EXPECT_EQ(p.argmin[1].to_string(), "{1,2}{3,4}{5}");
}

TEST(correlations, additivity_on_products) {
  cli::StateSampler rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityState a = rng.random_state({2, 2});
    const DensityState b = rng.random_state({2, 2, 2});
    const auto pa = brute_profile(a);
    const auto pb = brute_profile(b);
    const auto pab = brute_profile(tensor_product(a, b));
    for (int k = 1; k <= 5; ++k) {
      const double da = k <= 2 ? pa.dist_at(k) : 0.0;
      const double db = k <= 3 ? pb.dist_at(k) : 0.0;
      EXPECT_NEAR(pab.dist_at(k), da + db, 1e-9);
    }
  }
}

TEST(correlations, refinement_adds_at_most_n_orders) {
  // Correlations up to order 2 between a qubit and a ququart; splitting the ququart into
  // two qubits (n = 1) leaves nothing at order 3.
  cli::StateSampler rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityState s = tensor_product(rng.random_mixed({2, 4}), rng.random_state({2}));
    ASSERT_NEAR(brute_profile(s).dist_at(2), 0.0, 1e-10);
    const std::vector<int> split{2, 2};
    const DensityState fine = refine_subsystem(s, 1, split);
    EXPECT_NEAR(brute_profile(fine).dist_at(3), 0.0, 1e-10);
    EXPECT_GT(brute_profile(fine).dist_at(2), 1e-6);
  }
}

TEST(correlations, dist_equals_relative_entropy_to_argmin_product) {
  cli::StateSampler rng(24);
  for (int trial = 0; trial < 6; ++trial) {
    const DensityState s = rng.random_mixed({2, 2, 2, 2});
    const SubsetEntropyCache cache(s);
    for (int k = 1; k < 4; ++k) {
      const DistResult r = dist_to_pk(cache, k, MinimizationMode::brute);
      EXPECT_NEAR(r.bits, relative_entropy(s, product_of_marginals(s, r.argmin)), 1e-9);
      EXPECT_NEAR(r.bits, product_distance(cache, r.argmin), 1e-12);
    }
  }
}

TEST(correlations, multi_information_examples) {
  const DensityState bell = make_bell_product(2);
  EXPECT_NEAR(multi_information(SubsetEntropyCache(bell), 0b11), 2.0, 1e-10);
  const SubsetEntropyCache c3(make_classical(3));
  EXPECT_NEAR(multi_information(c3, 0b111), 2.0, 1e-10);
  EXPECT_NEAR(multi_information(c3, 0b001), 0.0, 1e-15);
}

TEST(correlations, neural_complexity_scales_by_four_thirds) {
  cli::StateSampler rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityState rho2 = rng.random_state({2, 2});
    const DensityState rho1 = rng.random_state({2});
    const double c2 = neural_complexity(SubsetEntropyCache(rho2));
    const DensityState joint = tensor_product(rho2, rho1);
    EXPECT_NEAR(neural_complexity(SubsetEntropyCache(joint)), 4.0 / 3.0 * c2, 1e-9);
  }
}

TEST(correlations, neural_complexity_matches_definition) {
  cli::StateSampler rng(26);
  const DensityState s = rng.random_state({2, 2, 2});
  const Matrix rho = s.to_matrix();
  const Dims dims = s.dims();
  auto mi = [&](const std::vector<int>& sites) {
    double sum = 0.0;
    for (int site : sites) sum += oracle::entropy_bits(oracle::partial_trace(rho, dims, {site}));
    return sum - oracle::entropy_bits(oracle::partial_trace(rho, dims, sites));
  };
  const double whole = mi({0, 1, 2});
  const double c1 = 1.0 / 3.0 * whole - (mi({0}) + mi({1}) + mi({2})) / 3.0;
  const double c2 = 2.0 / 3.0 * whole - (mi({0, 1}) + mi({0, 2}) + mi({1, 2})) / 3.0;
  EXPECT_NEAR(neural_complexity(SubsetEntropyCache(s)), c1 + c2, 1e-10);
}

TEST(correlations, weaving_forms_agree) {
  cli::StateSampler rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityState s = rng.random_state({2, 2, 2, 2});
    const auto p = brute_profile(s);
    const WeavingForms f = weaving_forms(p, rng.random_omega(4));
    EXPECT_NEAR(f.by_genuine, f.by_dist, 1e-9);
  }
  const auto p = brute_profile(make_ghz(4));
  EXPECT_NEAR(weaving(p, WeightScheme::linear(4)), 8.0, 1e-10);
  EXPECT_NEAR(weaving(p, WeightScheme::uniform(4)), p.total, 1e-10);
  EXPECT_NEAR(weaving(p, WeightScheme::delta(4, 4)), 2.0, 1e-10);
}

TEST(correlations, cnot_moves_correlations_up_one_order) {
  for (int k : {2, 3}) {
    for (double a : {0.3, 0.6, 1.0 / std::sqrt(2.0)}) {
      const DensityState grown =
          apply_channel(tensor_product(make_a_family(k, a), make_basis_state({2}, {0})),
                        gates::cnot(k - 1, k));
      const double expected = 2.0 * oracle::h2(a * a);
      EXPECT_NEAR(brute_profile(make_a_family(k, a)).genuine_at(k), expected, 1e-9);
      EXPECT_NEAR(brute_profile(grown).genuine_at(k + 1), expected, 1e-9);
      EXPECT_NEAR(max_abs_difference(grown, make_a_family(k + 1, a)), 0.0, 1e-12);
    }
  }
}

TEST(correlations, entropy_cache_modes_agree) {
  cli::StateSampler rng(28);
  const DensityState s = rng.random_state({2, 2, 3, 2});
  const SubsetEntropyCache eager(s, CacheFill::eager, 2);
  const SubsetEntropyCache lazy(s, CacheFill::lazy);
  EXPECT_TRUE(eager.is_eager());
  EXPECT_FALSE(lazy.is_eager());
  for (SubsetMask m = 0; m <= eager.full_mask(); ++m) {
    EXPECT_NEAR(eager.entropy(m), lazy.entropy(m), 1e-12);
    EXPECT_NEAR(eager.entropy(m), marginal_entropy(s, m), 1e-12);
  }
}

TEST(correlations, parallel_profile_is_deterministic) {
  cli::StateSampler rng(29);
  const DensityState s = rng.random_state({2, 2, 2, 2, 2});
  ProfileOptions serial;
  serial.mode = MinimizationMode::brute;
  ProfileOptions parallel = serial;
  parallel.workers = 4;
  const auto a = profile(s, serial);
  const auto b = profile(s, parallel);
  EXPECT_EQ(a.dist, b.dist);
  EXPECT_EQ(a.argmin, b.argmin);
}

TEST(correlations, weight_schemes) {
  const WeightScheme w = WeightScheme::from_omega({0.5, 2.0, 2.5});
  EXPECT_EQ(w.n(), 4);
  EXPECT_DOUBLE_EQ(w.big_omega(1), 0.5);
  EXPECT_DOUBLE_EQ(w.big_omega(2), 1.5);
  EXPECT_DOUBLE_EQ(w.big_omega(3), 0.5);
  const WeightScheme back = WeightScheme::from_big_omega(w.big_omega_values());
  EXPECT_EQ(back.omega_values(), w.omega_values());
  EXPECT_THROW(WeightScheme::from_omega({1.0, -0.1}), ArgumentError);
  EXPECT_THROW(WeightScheme::from_big_omega({1.0, -1.5}), ArgumentError);
  EXPECT_DOUBLE_EQ(WeightScheme::delta(4, 3).big_omega(3), -1.0);
  EXPECT_DOUBLE_EQ(WeightScheme::linear(5).omega(5), 4.0);
}
