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

#include "cli/random_states.h"

#include <cmath>

#include "weave/errors.h"

namespace weave::cli {

int StateSampler::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

double StateSampler::uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Complex StateSampler::gaussian() {
  const double re = normal_(rng_);
  const double im = normal_(rng_);
  return {re, im};
}

DensityState StateSampler::haar_pure(const Dims& dims) {
  const auto dim = static_cast<Eigen::Index>(dims_product(dims));
  Vector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) psi(i) = gaussian();
  psi.normalize();
  return DensityState::from_amplitudes(dims, std::move(psi));
}

DensityState StateSampler::random_mixed(const Dims& dims, int rank) {
  const auto dim = static_cast<Eigen::Index>(dims_product(dims));
  const Eigen::Index r = rank <= 0 ? dim : std::min<Eigen::Index>(rank, dim);
  Matrix g(dim, r);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) g(i, j) = gaussian();
  }
  Matrix rho = g * g.adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  rho /= rho.trace().real();
  return DensityState::from_matrix(dims, std::move(rho));
}

DensityState StateSampler::random_classical(const Dims& dims) {
  const std::uint64_t dim = dims_product(dims);
  ProbabilityTable table;
  double sum = 0.0;
  for (std::uint64_t i = 0; i < dim; ++i) {
    const double w = -std::log(uniform_real(1e-12, 1.0));  // flat Dirichlet
    table.push_back({i, w});
    sum += w;
  }
  for (auto& e : table) e.probability /= sum;
  // Renormalize the last entry so the sum is 1 to the last bit.
  double partial = 0.0;
  for (std::size_t i = 0; i + 1 < table.size(); ++i) partial += table[i].probability;
  table.back().probability = 1.0 - partial;
  return DensityState::from_probabilities(dims, std::move(table));
}

DensityState StateSampler::random_state(const Dims& dims) {
  switch (uniform_int(0, 2)) {
    case 0:
      return haar_pure(dims);
    case 1:
      return random_mixed(dims, uniform_int(0, 2));
    default:
      return random_classical(dims);
  }
}

DensityState StateSampler::random_product(const Dims& dims, const SetPartition& partition) {
  if (partition.size() != static_cast<int>(dims.size())) {
    throw ArgumentError("random_product: partition size differs from dims");
  }
  const auto& blocks = partition.blocks();
  auto block_dims = [&](const IndexSet& block) {
    Dims out;
    for (int i : block) out.push_back(dims[static_cast<std::size_t>(i)]);
    return out;
  };
  DensityState acc = random_state(block_dims(blocks.front()));
  IndexSet order = blocks.front();
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    acc = tensor_product(acc, random_state(block_dims(blocks[b])));
    order.insert(order.end(), blocks[b].begin(), blocks[b].end());
  }
  IndexSet perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  }
  return permute_subsystems(acc, perm);
}

SetPartition StateSampler::random_partition(int n, int max_block) {
  const auto all = enumerate_partitions(n, max_block);
  return all[static_cast<std::size_t>(uniform_int(0, static_cast<int>(all.size()) - 1))];
}

KrausChannel StateSampler::random_channel(int dim, IndexSet targets, int num_kraus) {
  const int r = num_kraus <= 0 ? uniform_int(1, 3) : num_kraus;
  const Eigen::Index rows = static_cast<Eigen::Index>(dim) * r;
  Matrix g(rows, dim);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = gaussian();
  }
  const Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix isometry = qr.householderQ() * Matrix::Identity(rows, dim);
  std::vector<Matrix> kraus;
  for (int i = 0; i < r; ++i) kraus.push_back(isometry.block(static_cast<Eigen::Index>(i) * dim, 0, dim, dim));
  return KrausChannel(std::move(kraus), std::move(targets));
}

WeightScheme StateSampler::random_omega(int n) {
  std::vector<double> omega;
  for (int k = 2; k <= n; ++k) omega.push_back(uniform_real(0.0, 2.0));
  return WeightScheme::from_omega(std::move(omega));
}

WeightScheme StateSampler::random_big_omega(int n) {
  std::vector<double> big;
  for (int i = 1; i <= n - 1; ++i) big.push_back(uniform_real(0.0, 1.0));
  return WeightScheme::from_big_omega(std::move(big));
}

}  // namespace weave::cli
