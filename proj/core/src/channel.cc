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

#include "weave/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "weave/errors.h"
#include "indexing.h"

namespace weave {
namespace {

// (op (x) I) x, where op acts on the digits listed in the target offsets.
Matrix apply_left(const Matrix& op, const std::vector<std::uint64_t>& target_offsets,
                  const std::vector<std::uint64_t>& rest_offsets, const Matrix& x) {
  const auto dt = static_cast<Eigen::Index>(target_offsets.size());
  Matrix out(x.rows(), x.cols());
  Matrix block(dt, x.cols());
  for (std::uint64_t r : rest_offsets) {
    for (Eigen::Index t = 0; t < dt; ++t) {
      block.row(t) = x.row(static_cast<Eigen::Index>(target_offsets[t] + r));
    }
    const Matrix mapped = op * block;
    for (Eigen::Index t = 0; t < dt; ++t) {
      out.row(static_cast<Eigen::Index>(target_offsets[t] + r)) = mapped.row(t);
    }
  }
  return out;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> kraus, IndexSet targets)
    : kraus_(std::move(kraus)), targets_(std::move(targets)) {
  if (kraus_.empty()) throw ValidationError("channel needs at least one Kraus operator");
  if (targets_.empty()) throw ValidationError("channel needs at least one target");
  IndexSet sorted = targets_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("channel targets must be distinct");
  }
  const Eigen::Index d = kraus_.front().cols();
  Matrix completeness = Matrix::Zero(d, d);
  for (const Matrix& k : kraus_) {
    if (k.rows() != d || k.cols() != d) {
      throw ValidationError("Kraus operators must be square and of equal size");
    }
    completeness += k.adjoint() * k;
  }
  const double err = (completeness - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > tol::kKrausCompleteness) {
    throw ValidationError("Kraus set is incomplete (max |sum K^dag K - I| = " +
                          std::to_string(err) + ")");
  }
}

KrausChannel KrausChannel::unitary(Matrix u, IndexSet targets) {
  std::vector<Matrix> ops;
  ops.push_back(std::move(u));
  return KrausChannel(std::move(ops), std::move(targets));
}

DensityState apply_channel(const DensityState& s, const KrausChannel& channel,
                           const Limits& limits) {
  const IndexSet& targets = channel.targets();
  Eigen::Index joint = 1;
  for (int t : targets) {
    if (t < 0 || t >= s.num_subsystems()) throw ArgumentError("channel target out of range");
    joint *= s.dims()[t];
  }
  if (joint != channel.dim()) {
    throw ArgumentError("channel dimension " + std::to_string(channel.dim()) +
                        " does not match targeted dimension " + std::to_string(joint));
  }
  const IndexSet rest = detail::complement_of(s.num_subsystems(), targets);
  const auto target_offsets = detail::offsets_for(s.dims(), targets);
  const auto rest_offsets = detail::offsets_for(s.dims(), rest);

  if (s.representation() == Representation::pure && channel.kraus().size() == 1) {
    const Matrix psi = s.amplitudes();
    const Matrix out = apply_left(channel.kraus().front(), target_offsets, rest_offsets, psi);
    return DensityState::from_amplitudes(s.dims(), out.col(0), limits);
  }

  const Matrix rho = s.to_matrix(limits);
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& k : channel.kraus()) {
    const Matrix left = apply_left(k, target_offsets, rest_offsets, rho);
    // K (K rho)^dag = K rho K^dag for Hermitian rho.
    out += apply_left(k, target_offsets, rest_offsets, left.adjoint());
  }
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityState::from_matrix(s.dims(), std::move(out), limits);
}

namespace gates {

KrausChannel cnot(int control, int target) {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return KrausChannel::unitary(std::move(u), {control, target});
}

KrausChannel fully_depolarizing(int dim, int target) {
  // K_{ij} = |i><j| / sqrt(d)
  std::vector<Matrix> ops;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Matrix k = Matrix::Zero(dim, dim);
      k(i, j) = scale;
      ops.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(ops), {target});
}

KrausChannel identity(int dim, int target) {
  return KrausChannel::unitary(Matrix::Identity(dim, dim), {target});
}

}  // namespace gates
}  // namespace weave
