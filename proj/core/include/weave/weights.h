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

#ifndef WEAVE_WEIGHTS_H
#define WEAVE_WEIGHTS_H

#include <vector>

namespace weave {

/// Weights of a weaving measure for an N-partite state, held in both forms:
///   omega[k]     for k = 2..N   (weight of genuine k-partite correlations)
///   big_omega[i] for i = 1..N-1 (weight of the distance to the order-i product set)
/// related by omega_k = sum_{i<k} big_omega_i. Every omega_k must be >= 0; big_omega
/// entries may be negative (e.g. delta weights).
class WeightScheme {
 public:
  /// `omega` lists omega_2..omega_N.
  static WeightScheme from_omega(std::vector<double> omega);
  /// `big_omega` lists Omega_1..Omega_{N-1}.
  static WeightScheme from_big_omega(std::vector<double> big_omega);

  /// omega_k = k - 1, i.e. Omega_i = 1.
  static WeightScheme linear(int n);
  /// omega_k = 1: weaving equals total correlations.
  static WeightScheme uniform(int n);
  /// omega_l = [l == k]: weaving equals genuine k-partite correlations.
  static WeightScheme delta(int n, int k);

  /// Number of subsystems the scheme is sized for.
  int n() const { return static_cast<int>(omega_.size()) + 1; }
  double omega(int k) const;      // k in [2, N]
  double big_omega(int i) const;  // i in [1, N-1]
  const std::vector<double>& omega_values() const { return omega_; }
  const std::vector<double>& big_omega_values() const { return big_omega_; }

 private:
  WeightScheme(std::vector<double> omega, std::vector<double> big_omega);

  std::vector<double> omega_;
  std::vector<double> big_omega_;
};

}  // namespace weave

#endif  // WEAVE_WEIGHTS_H
