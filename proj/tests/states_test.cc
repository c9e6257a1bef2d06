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

#include "gtest/gtest.h"

#include "oracles.h"
#include "weave/closed_forms.h"
#include "weave/errors.h"
#include "weave/states.h"

using namespace weave;

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(states, ghz_amplitudes) {
  const DensityState s = make_ghz(3);
  const Vector& psi = s.amplitudes();
  ASSERT_EQ(psi.size(), 8);
  EXPECT_NEAR(std::abs(psi(0)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(psi(7)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
  EXPECT_TRUE(s.permutation_invariance_hint());
}

TEST(states, ghz_qudit_uses_two_levels) {
  const DensityState s = make_ghz(2, 3);
  EXPECT_EQ(s.dims(), (Dims{3, 3}));
  EXPECT_NEAR(std::abs(s.amplitudes()(4)), 1.0 / std::sqrt(2.0), 1e-15);  // |11>
  const IndexSet first{0};
  EXPECT_NEAR(marginal_entropy(s, first), 1.0, 1e-12);
}

TEST(states, classical_table) {
  const DensityState s = make_classical(3, 3);
  EXPECT_EQ(s.representation(), Representation::classical);
  ASSERT_EQ(s.probabilities().size(), 3u);
  EXPECT_EQ(s.probabilities()[1].index, 13u);  // 111 in base 3
  EXPECT_EQ(s.probabilities()[2].index, 26u);
  EXPECT_NEAR(vn_entropy(s), std::log2(3.0), 1e-12);
}

TEST(states, dicke_marginals_are_hypergeometric) {
  for (int n : {4, 5, 6}) {
    for (int m = 0; m <= n; ++m) {
      const DensityState s = make_dicke(n, m);
      EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-14);
      const Matrix rho = s.to_matrix();
      for (int j = 1; j < n; ++j) {
        std::vector<int> keep;
        for (int i = 0; i < j; ++i) keep.push_back(i);
        const Matrix marginal = oracle::partial_trace(rho, s.dims(), keep);
        double expected = 0.0;
        for (int i = 0; i <= std::min(j, m); ++i) {
          if (m - i > n - j) continue;
          const double p = binomial(j, i) * binomial(n - j, m - i) / binomial(n, m);
          if (p > 0.0) expected -= p * std::log2(p);
        }
        EXPECT_NEAR(oracle::entropy_bits(marginal), expected, 1e-10) << n << " " << m << " " << j;
        EXPECT_NEAR(dicke_marginal_entropy(n, m, j), expected, 1e-10);
      }
    }
  }
}

TEST(states, bell_product_marginals) {
  const DensityState s = make_bell_product(4, 3);
  EXPECT_EQ(s.dims(), (Dims{3, 3, 3, 3}));
  const IndexSet pair{0, 1};
  const IndexSet straddle{1, 2};
  EXPECT_NEAR(marginal_entropy(s, pair), 0.0, 1e-10);
  EXPECT_NEAR(marginal_entropy(s, straddle), 2.0 * std::log2(3.0), 1e-10);
}

TEST(states, classical_pair_product_table) {
  const DensityState s = make_classical_pair_product(4);
  ASSERT_EQ(s.probabilities().size(), 4u);
  EXPECT_EQ(s.probabilities()[0].index, 0u);
  EXPECT_EQ(s.probabilities()[1].index, 0b0011u);
  EXPECT_EQ(s.probabilities()[2].index, 0b1100u);
  EXPECT_EQ(s.probabilities()[3].index, 0b1111u);
}

TEST(states, a_family_marginal) {
  const double a = 0.6;
  const DensityState s = make_a_family(3, a);
  const IndexSet first{0};
  EXPECT_NEAR(marginal_entropy(s, first), oracle::h2(a * a), 1e-12);
  EXPECT_THROW(make_a_family(3, 1.0), ArgumentError);
}

TEST(states, family_names_round_trip) {
  for (FamilyId id : {FamilyId::ghz, FamilyId::classical, FamilyId::bell_product,
                      FamilyId::classical_pair_product, FamilyId::dicke, FamilyId::a_family,
                      FamilyId::qudit_classical, FamilyId::qudit_bell_product}) {
    EXPECT_EQ(family_from_name(family_name(id)), id);
  }
  EXPECT_FALSE(family_from_name("w-state").has_value());
}

TEST(states, validation_errors) {
  EXPECT_THROW(validate(StateFamily{FamilyId::bell_product, 3, 2, 0, 0.0}), ArgumentError);
  EXPECT_THROW(validate(StateFamily{FamilyId::dicke, 4, 2, 5, 0.0}), ArgumentError);
  EXPECT_THROW(validate(StateFamily{FamilyId::ghz, 4, 1, 0, 0.0}), ArgumentError);
  EXPECT_THROW(validate(StateFamily{FamilyId::custom, 4, 2, 0, 0.0}), ArgumentError);
  EXPECT_NO_THROW(validate(StateFamily{FamilyId::classical_pair_product, 6, 2, 0, 0.0}));
}

TEST(states, capacity_errors) {
  Limits small;
  small.max_pure_dim = 64;
  EXPECT_THROW(make_ghz(7, 2, small), CapacityError);
  EXPECT_NO_THROW(make_ghz(6, 2, small));
  // Classical states are tables and ignore the dense caps.
  EXPECT_NO_THROW(make_classical(40));
}
