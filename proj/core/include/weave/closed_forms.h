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

#ifndef WEAVE_CLOSED_FORMS_H
#define WEAVE_CLOSED_FORMS_H

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weave/states.h"
#include "weave/weights.h"

namespace weave {

/// Families whose correlation profile is known exactly, evaluated without building a
/// density matrix. All values are in bits.
enum class ClosedFormId {
  ghz,
  classical,
  bell_product,
  classical_pair_product,
  dicke_1,
  dicke_half,
  qudit_classical,
  qudit_bell_product,
  a_family,
};

struct ClosedFormFamily {
  ClosedFormId id = ClosedFormId::ghz;
  int n = 2;
  int d = 2;
  double a = 0.70710678118654752440;  // a-family amplitude
};

std::string closed_form_name(ClosedFormId id);
std::optional<ClosedFormId> closed_form_from_name(std::string_view name);
const std::vector<ClosedFormId>& all_closed_forms();

void validate(const ClosedFormFamily& family);

/// The matrix-backed family with the same state, for cross-checks.
StateFamily to_state_family(const ClosedFormFamily& family);

/// S^{k->N} for 1 <= k <= N.
double cf_dist(const ClosedFormFamily& family, int k);
/// cf_dist for k = 1..N in one pass (shares marginal entropies across k).
std::vector<double> cf_dist_all(const ClosedFormFamily& family);
/// S^k = cf_dist(k-1) - cf_dist(k) for 2 <= k <= N.
double cf_genuine(const ClosedFormFamily& family, int k);
/// sum_{k=1}^{N-1} Omega_k cf_dist(k).
double cf_weaving(const ClosedFormFamily& family, const WeightScheme& weights);

/// -p log2 p - (1-p) log2 (1-p).
double binary_entropy(double p);

/// Eigenvalues of the j-party marginal of the n-qubit Dicke state with m excitations:
/// binom(j,i) binom(n-j, m-i) / binom(n, m) for the feasible i, ascending in i.
std::vector<double> dicke_marginal_spectrum(int n, int m, int j);
double dicke_marginal_entropy(int n, int m, int j);

/// Compact-partition distance for one excitation, written through h(x) = x log2 x.
double dicke_one_dist(int n, int k);
/// Compact-partition distance for n/2 excitations as a pair of hypergeometric sums.
double dicke_half_dist(int n, int k);

enum class ScalingLaw { linear, n_log_n, quadratic };

ScalingLaw claimed_scaling(ClosedFormId id);
std::string scaling_law_name(ScalingLaw law);
/// N, N log2 N or N^2.
double scaling_normalizer(ScalingLaw law, int n);

struct ScalingPoint {
  int n = 0;
  double weaving = 0.0;
  /// weaving / scaling_normalizer(claimed law, n).
  double coefficient = 0.0;
};

/// Evaluates cf_weaving at each n in `ns` (the prototype supplies id, d and a).
std::vector<ScalingPoint> cf_scaling_sweep(const ClosedFormFamily& prototype,
                                           std::span<const int> ns,
                                           const std::function<WeightScheme(int)>& weights);

}  // namespace weave

#endif  // WEAVE_CLOSED_FORMS_H
