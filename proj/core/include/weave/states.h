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

#ifndef WEAVE_STATES_H
#define WEAVE_STATES_H

#include <optional>
#include <string>
#include <string_view>

#include "weave/density_state.h"
#include "weave/limits.h"

namespace weave {

enum class FamilyId {
  ghz,
  classical,
  bell_product,
  classical_pair_product,
  dicke,
  a_family,
  qudit_classical,
  qudit_bell_product,
  custom,
};

/// A named state family plus its parameters.
struct StateFamily {
  FamilyId id = FamilyId::ghz;
  int n = 2;
  int d = 2;
  int excitations = 0;      // dicke
  double amplitude = 0.0;   // a-family, in (0, 1)
};

/// Canonical CLI names: "ghz", "classical", "bell-product", ...
std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

/// Throws ArgumentError when the parameters violate the family's constraints.
void validate(const StateFamily& family);
DensityState make_state(const StateFamily& family, const Limits& limits = {});

/// (|0...0> + |1...1>)/sqrt(2) on n qudits; for d > 2 only levels 0 and 1 are used.
DensityState make_ghz(int n, int d = 2, const Limits& limits = {});

/// sum_i |i...i><i...i| / d as a probability table.
DensityState make_classical(int n, int d = 2);

/// Equal superposition of all n-bit strings of Hamming weight m.
DensityState make_dicke(int n, int m, const Limits& limits = {});

/// (sum_i |ii>/sqrt(d))^{(x) n/2}, pairs on subsystems (0,1), (2,3), ...
DensityState make_bell_product(int n, int d = 2, const Limits& limits = {});

/// [(|00><00| + |11><11|)/2]^{(x) n/2} as a probability table.
DensityState make_classical_pair_product(int n);

/// a|0>^k + sqrt(1 - a^2)|1>^k.
DensityState make_a_family(int k, double a, const Limits& limits = {});

/// Pure computational basis state with the given digits.
DensityState make_basis_state(const Dims& dims, const std::vector<int>& digits,
                              const Limits& limits = {});

/// I/d on one subsystem.
DensityState make_maximally_mixed(int d);

}  // namespace weave

#endif  // WEAVE_STATES_H
