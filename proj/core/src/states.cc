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

#include "weave/states.h"

#include <array>
#include <bit>
#include <cmath>
#include <utility>

#include "weave/errors.h"

namespace weave {
namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 9> kNames{{
    {FamilyId::ghz, "ghz"},
    {FamilyId::classical, "classical"},
    {FamilyId::bell_product, "bell-product"},
    {FamilyId::classical_pair_product, "classical-pair-product"},
    {FamilyId::dicke, "dicke"},
    {FamilyId::a_family, "a-family"},
    {FamilyId::qudit_classical, "qudit-classical"},
    {FamilyId::qudit_bell_product, "qudit-bell-product"},
    {FamilyId::custom, "custom"},
}};

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

std::uint64_t all_level(int n, int d, int level) {
  std::uint64_t index = 0;
  for (int i = 0; i < n; ++i) index = index * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(level);
  return index;
}

}  // namespace

std::string family_name(FamilyId id) {
  for (const auto& [fid, name] : kNames) {
    if (fid == id) return std::string(name);
  }
  return "unknown";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& [fid, fname] : kNames) {
    if (fname == name) return fid;
  }
  return std::nullopt;
}

void validate(const StateFamily& f) {
  require(f.n >= 1, "family needs N >= 1");
  require(f.d >= 2, "family needs d >= 2");
  switch (f.id) {
    case FamilyId::bell_product:
    case FamilyId::qudit_bell_product:
    case FamilyId::classical_pair_product:
      require(f.n % 2 == 0, family_name(f.id) + " needs even N");
      break;
    case FamilyId::dicke:
      require(f.excitations >= 0 && f.excitations <= f.n, "dicke needs 0 <= m <= N");
      break;
    case FamilyId::a_family:
      require(f.amplitude > 0.0 && f.amplitude < 1.0, "a-family needs 0 < a < 1");
      break;
    case FamilyId::custom:
      throw ArgumentError("custom states are read from files, not constructed by family");
    default:
      break;
  }
}

DensityState make_state(const StateFamily& f, const Limits& limits) {
  validate(f);
  switch (f.id) {
    case FamilyId::ghz:
      return make_ghz(f.n, f.d, limits);
    case FamilyId::classical:
    case FamilyId::qudit_classical:
      return make_classical(f.n, f.d);
    case FamilyId::bell_product:
    case FamilyId::qudit_bell_product:
      return make_bell_product(f.n, f.d, limits);
    case FamilyId::classical_pair_product:
      return make_classical_pair_product(f.n);
    case FamilyId::dicke:
      return make_dicke(f.n, f.excitations, limits);
    case FamilyId::a_family:
      return make_a_family(f.n, f.amplitude, limits);
    case FamilyId::custom:
      break;
  }
  throw ArgumentError("unsupported family");
}

DensityState make_ghz(int n, int d, const Limits& limits) {
  require(n >= 1 && d >= 2, "make_ghz needs N >= 1 and d >= 2");
  Dims dims(static_cast<std::size_t>(n), d);
  const std::uint64_t total = dims_product(dims);
  if (total > limits.max_pure_dim) throw CapacityError("GHZ state exceeds the pure-state limit");
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(total));
  psi(0) = M_SQRT1_2;
  psi(static_cast<Eigen::Index>(all_level(n, d, 1))) = M_SQRT1_2;
  return DensityState::from_amplitudes(std::move(dims), std::move(psi), limits)
      .with_permutation_invariance_hint(true);
}

DensityState make_classical(int n, int d) {
  require(n >= 1 && d >= 2, "make_classical needs N >= 1 and d >= 2");
  Dims dims(static_cast<std::size_t>(n), d);
  dims_product(dims);
  ProbabilityTable table;
  for (int level = 0; level < d; ++level) {
    table.push_back({all_level(n, d, level), 1.0 / d});
  }
  return DensityState::from_probabilities(std::move(dims), std::move(table))
      .with_permutation_invariance_hint(true);
}

DensityState make_dicke(int n, int m, const Limits& limits) {
  require(n >= 1 && m >= 0 && m <= n, "make_dicke needs 0 <= m <= N");
  Dims dims(static_cast<std::size_t>(n), 2);
  const std::uint64_t total = dims_product(dims);
  if (total > limits.max_pure_dim) throw CapacityError("Dicke state exceeds the pure-state limit");
  // Bit (n-1-i) of the flat index is qubit i; weight counts set bits either way.
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(total));
  std::uint64_t count = 0;
  for (std::uint64_t index = 0; index < total; ++index) {
    if (std::popcount(index) == m) ++count;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::uint64_t index = 0; index < total; ++index) {
    if (std::popcount(index) == m) psi(static_cast<Eigen::Index>(index)) = amp;
  }
  return DensityState::from_amplitudes(std::move(dims), std::move(psi), limits)
      .with_permutation_invariance_hint(true);
}

DensityState make_bell_product(int n, int d, const Limits& limits) {
  require(n >= 2 && n % 2 == 0, "make_bell_product needs even N");
  require(d >= 2, "make_bell_product needs d >= 2");
  Dims dims(static_cast<std::size_t>(n), d);
  const std::uint64_t total = dims_product(dims);
  if (total > limits.max_pure_dim) throw CapacityError("Bell product exceeds the pure-state limit");
  const int pairs = n / 2;
  const auto d2 = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
  std::uint64_t branches = 1;
  for (int p = 0; p < pairs; ++p) branches *= static_cast<std::uint64_t>(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(branches));
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(total));
  // Each branch picks one level per pair; the pair contributes digits (i, i).
  for (std::uint64_t branch = 0; branch < branches; ++branch) {
    std::uint64_t rest = branch;
    std::uint64_t index = 0;
    std::uint64_t place = 1;
    for (int p = pairs - 1; p >= 0; --p) {
      const std::uint64_t level = rest % static_cast<std::uint64_t>(d);
      rest /= static_cast<std::uint64_t>(d);
      index += (level * static_cast<std::uint64_t>(d) + level) * place;
      place *= d2;
    }
    psi(static_cast<Eigen::Index>(index)) = amp;
  }
  return DensityState::from_amplitudes(std::move(dims), std::move(psi), limits);
}

DensityState make_classical_pair_product(int n) {
  require(n >= 2 && n % 2 == 0, "make_classical_pair_product needs even N");
  const int pairs = n / 2;
  if (pairs > 24) throw CapacityError("classical pair product table limited to 24 pairs");
  Dims dims(static_cast<std::size_t>(n), 2);
  const std::uint64_t branches = std::uint64_t{1} << pairs;
  ProbabilityTable table;
  table.reserve(branches);
  for (std::uint64_t branch = 0; branch < branches; ++branch) {
    std::uint64_t index = 0;
    for (int p = 0; p < pairs; ++p) {
      const std::uint64_t bit = (branch >> (pairs - 1 - p)) & 1U;
      index = (index << 2) | (bit << 1) | bit;
    }
    table.push_back({index, 1.0 / static_cast<double>(branches)});
  }
  return DensityState::from_probabilities(std::move(dims), std::move(table));
}

DensityState make_a_family(int k, double a, const Limits& limits) {
  require(k >= 1, "make_a_family needs k >= 1");
  require(a > 0.0 && a < 1.0, "make_a_family needs 0 < a < 1");
  Dims dims(static_cast<std::size_t>(k), 2);
  const std::uint64_t total = dims_product(dims);
  if (total > limits.max_pure_dim) throw CapacityError("a-family state exceeds the pure-state limit");
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(total));
  psi(0) = a;
  psi(static_cast<Eigen::Index>(total - 1)) = std::sqrt(1.0 - a * a);
  return DensityState::from_amplitudes(std::move(dims), std::move(psi), limits)
      .with_permutation_invariance_hint(true);
}

DensityState make_basis_state(const Dims& dims, const std::vector<int>& digits,
                              const Limits& limits) {
  require(dims.size() == digits.size(), "make_basis_state: one digit per subsystem");
  const std::uint64_t total = dims_product(dims);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    require(digits[i] >= 0 && digits[i] < dims[i], "make_basis_state: digit out of range");
    index = index * static_cast<std::uint64_t>(dims[i]) + static_cast<std::uint64_t>(digits[i]);
  }
  if (total > limits.max_pure_dim) throw CapacityError("basis state exceeds the pure-state limit");
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(total));
  psi(static_cast<Eigen::Index>(index)) = 1.0;
  return DensityState::from_amplitudes(dims, std::move(psi), limits);
}

DensityState make_maximally_mixed(int d) {
  require(d >= 2, "make_maximally_mixed needs d >= 2");
  return DensityState::from_matrix({d}, Matrix::Identity(d, d) / static_cast<double>(d));
}

}  // namespace weave
