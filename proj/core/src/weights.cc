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

#include "weave/weights.h"

#include <cmath>
#include <string>

#include "weave/errors.h"

namespace weave {
namespace {

void require_nonnegative(const std::vector<double>& omega) {
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] >= 0.0) || !std::isfinite(omega[i])) {
      throw ArgumentError("weight omega_" + std::to_string(i + 2) +
                          " must be finite and nonnegative");
    }
  }
}

}  // namespace

WeightScheme::WeightScheme(std::vector<double> omega, std::vector<double> big_omega)
    : omega_(std::move(omega)), big_omega_(std::move(big_omega)) {}

WeightScheme WeightScheme::from_omega(std::vector<double> omega) {
  require_nonnegative(omega);
  std::vector<double> big(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    big[i] = i == 0 ? omega[0] : omega[i] - omega[i - 1];
  }
  return WeightScheme(std::move(omega), std::move(big));
}

WeightScheme WeightScheme::from_big_omega(std::vector<double> big_omega) {
  std::vector<double> omega(big_omega.size());
  double running = 0.0;
  for (std::size_t i = 0; i < big_omega.size(); ++i) {
    if (!std::isfinite(big_omega[i])) throw ArgumentError("weights must be finite");
    running += big_omega[i];
    omega[i] = running;
  }
  require_nonnegative(omega);
  return WeightScheme(std::move(omega), std::move(big_omega));
}

WeightScheme WeightScheme::linear(int n) {
  if (n < 1) throw ArgumentError("weight scheme needs n >= 1");
  return from_big_omega(std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
}

WeightScheme WeightScheme::uniform(int n) {
  if (n < 1) throw ArgumentError("weight scheme needs n >= 1");
  return from_omega(std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
}

WeightScheme WeightScheme::delta(int n, int k) {
  if (k < 2 || k > n) throw ArgumentError("delta weights need 2 <= k <= n");
  std::vector<double> omega(static_cast<std::size_t>(n - 1), 0.0);
  omega[static_cast<std::size_t>(k - 2)] = 1.0;
  return from_omega(std::move(omega));
}

double WeightScheme::omega(int k) const {
  if (k < 2 || k > n()) throw ArgumentError("omega index out of range");
  return omega_[static_cast<std::size_t>(k - 2)];
}

double WeightScheme::big_omega(int i) const {
  if (i < 1 || i > n() - 1) throw ArgumentError("Omega index out of range");
  return big_omega_[static_cast<std::size_t>(i - 1)];
}

}  // namespace weave
