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

#include "weave/density_state.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "weave/errors.h"
#include "indexing.h"

namespace weave {
namespace {

using detail::complement_of;
using detail::offsets_for;
using detail::strides_of;

constexpr std::uint64_t kMaxTotalDim = std::uint64_t{1} << 62;

void validate_dims(const Dims& dims) {
  if (dims.empty()) throw ArgumentError("state must have at least one subsystem");
  if (dims.size() > 64) throw CapacityError("at most 64 subsystems are supported");
  for (int d : dims) {
    if (d < 2) throw ArgumentError("subsystem dimension " + std::to_string(d) + " < 2");
  }
}

void check_dense_capacity(std::uint64_t dim, const Limits& limits) {
  if (dim > limits.max_dense_dim) {
    throw CapacityError("total dimension " + std::to_string(dim) +
                        " exceeds the dense limit " + std::to_string(limits.max_dense_dim));
  }
}

void check_pure_capacity(std::uint64_t dim, const Limits& limits) {
  if (dim > limits.max_pure_dim) {
    throw CapacityError("total dimension " + std::to_string(dim) +
                        " exceeds the pure-state limit " + std::to_string(limits.max_pure_dim));
  }
}

IndexSet normalized_keep(const DensityState& s, std::span<const int> keep) {
  IndexSet sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("subsystem index listed twice");
  }
  for (int i : sorted) {
    if (i < 0 || i >= s.num_subsystems()) {
      throw ArgumentError("subsystem index " + std::to_string(i) + " out of range");
    }
  }
  return sorted;
}

Dims select_dims(const Dims& dims, std::span<const int> which) {
  Dims out;
  out.reserve(which.size());
  for (int i : which) out.push_back(dims[i]);
  return out;
}

// Flat index of the kept digits of `index`, kept subsystems ascending.
std::uint64_t project_index(std::uint64_t index, const Dims& dims,
                            const std::vector<bool>& kept) {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    const auto d = static_cast<std::uint64_t>(dims[i]);
    const std::uint64_t digit = index % d;
    index /= d;
    if (kept[i]) {
      out += digit * place;
      place *= d;
    }
  }
  return out;
}

ProbabilityTable marginal_table(const DensityState& s, std::span<const int> keep_sorted) {
  std::vector<bool> kept(s.num_subsystems(), false);
  for (int i : keep_sorted) kept[i] = true;
  std::map<std::uint64_t, double> acc;
  for (const auto& e : s.probabilities()) {
    acc[project_index(e.index, s.dims(), kept)] += e.probability;
  }
  ProbabilityTable out;
  out.reserve(acc.size());
  for (const auto& [index, p] : acc) out.push_back({index, p});
  return out;
}

// Amplitudes reshaped to (kept x traced).
Matrix reshape_amplitudes(const DensityState& s, std::span<const int> keep_sorted) {
  const IndexSet rest = complement_of(s.num_subsystems(), keep_sorted);
  const auto kept_offsets = offsets_for(s.dims(), keep_sorted);
  const auto rest_offsets = offsets_for(s.dims(), rest);
  const Vector& psi = s.amplitudes();
  Matrix m(static_cast<Eigen::Index>(kept_offsets.size()),
           static_cast<Eigen::Index>(rest_offsets.size()));
  for (std::size_t a = 0; a < kept_offsets.size(); ++a) {
    for (std::size_t t = 0; t < rest_offsets.size(); ++t) {
      m(a, t) = psi(static_cast<Eigen::Index>(kept_offsets[a] + rest_offsets[t]));
    }
  }
  return m;
}

Matrix reduce_dense(const Matrix& rho, const Dims& dims, std::span<const int> keep_sorted) {
  const IndexSet rest = complement_of(static_cast<int>(dims.size()), keep_sorted);
  const auto kept_offsets = offsets_for(dims, keep_sorted);
  const auto rest_offsets = offsets_for(dims, rest);
  const auto dk = static_cast<Eigen::Index>(kept_offsets.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex sum{0.0, 0.0};
      for (std::uint64_t t : rest_offsets) {
        sum += rho(static_cast<Eigen::Index>(kept_offsets[a] + t),
                   static_cast<Eigen::Index>(kept_offsets[b] + t));
      }
      out(a, b) = sum;
    }
  }
  return out;
}

double xlog2x(double x) { return x <= tol::kEigenClip ? 0.0 : x * std::log2(x); }

// Maps each old flat index to its index after reordering subsystems by `perm`.
std::uint64_t permuted_index(std::uint64_t index, const Dims& dims, std::span<const int> perm,
                             const std::vector<std::uint64_t>& new_strides) {
  std::vector<std::uint64_t> digits(dims.size());
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    digits[i] = index % static_cast<std::uint64_t>(dims[i]);
    index /= static_cast<std::uint64_t>(dims[i]);
  }
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < perm.size(); ++j) out += digits[perm[j]] * new_strides[j];
  return out;
}

}  // namespace

std::uint64_t dims_product(std::span<const int> dims) {
  std::uint64_t total = 1;
  for (int d : dims) {
    if (d <= 0) throw ArgumentError("dimensions must be positive");
    if (total > kMaxTotalDim / static_cast<std::uint64_t>(d)) {
      throw CapacityError("total dimension overflows 2^62");
    }
    total *= static_cast<std::uint64_t>(d);
  }
  return total;
}

SubsetMask mask_of(std::span<const int> indices) {
  SubsetMask mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= 64) throw ArgumentError("subsystem index out of mask range");
    mask |= SubsetMask{1} << i;
  }
  return mask;
}

IndexSet indices_of(SubsetMask mask) {
  IndexSet out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

DensityState DensityState::from_matrix(Dims dims, Matrix matrix, const Limits& limits) {
  validate_dims(dims);
  const std::uint64_t total = dims_product(dims);
  check_dense_capacity(total, limits);
  if (static_cast<std::uint64_t>(matrix.rows()) != total || matrix.rows() != matrix.cols()) {
    throw ValidationError("matrix shape does not match the product of dims");
  }
  const double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermitian) {
    throw ValidationError("matrix is not Hermitian (max |M - M^dag| = " +
                          std::to_string(asym) + ")");
  }
  const double trace = matrix.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    throw ValidationError("trace " + std::to_string(trace) + " differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  if (solver.eigenvalues().minCoeff() < -tol::kPositivity) {
    throw ValidationError("matrix is not positive semidefinite");
  }
  return DensityState(std::move(dims), total, std::move(matrix));
}

DensityState DensityState::from_amplitudes(Dims dims, Vector amplitudes,
                                           const Limits& limits) {
  validate_dims(dims);
  const std::uint64_t total = dims_product(dims);
  check_pure_capacity(total, limits);
  if (static_cast<std::uint64_t>(amplitudes.size()) != total) {
    throw ValidationError("amplitude vector length does not match the product of dims");
  }
  if (std::abs(amplitudes.norm() - 1.0) > tol::kPureNorm) {
    throw ValidationError("amplitude vector is not normalized");
  }
  return DensityState(std::move(dims), total, std::move(amplitudes));
}

DensityState DensityState::from_probabilities(Dims dims, ProbabilityTable table) {
  validate_dims(dims);
  const std::uint64_t total = dims_product(dims);
  std::map<std::uint64_t, double> merged;
  for (const auto& e : table) {
    if (e.index >= total) throw ValidationError("probability index outside the state space");
    if (!(e.probability >= 0.0)) throw ValidationError("negative probability");
    merged[e.index] += e.probability;
  }
  ProbabilityTable clean;
  double sum = 0.0;
  for (const auto& [index, p] : merged) {
    if (p == 0.0) continue;
    clean.push_back({index, p});
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kProbabilitySum) {
    throw ValidationError("probabilities sum to " + std::to_string(sum));
  }
  return DensityState(std::move(dims), total, std::move(clean));
}

Representation DensityState::representation() const {
  switch (storage_.index()) {
    case 0:
      return Representation::dense;
    case 1:
      return Representation::pure;
    default:
      return Representation::classical;
  }
}

const Matrix& DensityState::matrix() const {
  if (const auto* m = std::get_if<Matrix>(&storage_)) return *m;
  throw ArgumentError("state is not stored as a dense matrix");
}

const Vector& DensityState::amplitudes() const {
  if (const auto* v = std::get_if<Vector>(&storage_)) return *v;
  throw ArgumentError("state is not stored as a pure amplitude vector");
}

const ProbabilityTable& DensityState::probabilities() const {
  if (const auto* t = std::get_if<ProbabilityTable>(&storage_)) return *t;
  throw ArgumentError("state is not stored as a classical probability table");
}

Matrix DensityState::to_matrix(const Limits& limits) const {
  check_dense_capacity(total_dim_, limits);
  switch (representation()) {
    case Representation::dense:
      return matrix();
    case Representation::pure: {
      const Vector& psi = amplitudes();
      return psi * psi.adjoint();
    }
    case Representation::classical: {
      const auto d = static_cast<Eigen::Index>(total_dim_);
      Matrix m = Matrix::Zero(d, d);
      for (const auto& e : probabilities()) {
        const auto i = static_cast<Eigen::Index>(e.index);
        m(i, i) = e.probability;
      }
      return m;
    }
  }
  return {};
}

DensityState DensityState::with_permutation_invariance_hint(bool hint) const {
  DensityState copy = *this;
  copy.symmetric_hint_ = hint;
  return copy;
}

DensityState DensityState::with_dims(Dims new_dims) const {
  validate_dims(new_dims);
  if (dims_product(new_dims) != total_dim_) {
    throw ArgumentError("new dims do not multiply to the total dimension");
  }
  return DensityState(std::move(new_dims), total_dim_, storage_);
}

DensityState tensor_product(const DensityState& a, const DensityState& b,
                            const Limits& limits) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  validate_dims(dims);
  const std::uint64_t total = dims_product(dims);
  const auto ra = a.representation();
  const auto rb = b.representation();

  if (ra == Representation::classical && rb == Representation::classical) {
    ProbabilityTable table;
    table.reserve(a.probabilities().size() * b.probabilities().size());
    for (const auto& ea : a.probabilities()) {
      for (const auto& eb : b.probabilities()) {
        table.push_back({ea.index * b.total_dim() + eb.index, ea.probability * eb.probability});
      }
    }
    return DensityState::from_probabilities(std::move(dims), std::move(table));
  }

  if (ra == Representation::pure && rb == Representation::pure) {
    check_pure_capacity(total, limits);
    const Vector& va = a.amplitudes();
    const Vector& vb = b.amplitudes();
    Vector out(static_cast<Eigen::Index>(total));
    for (Eigen::Index i = 0; i < va.size(); ++i) {
      out.segment(i * vb.size(), vb.size()) = va(i) * vb;
    }
    return DensityState::from_amplitudes(std::move(dims), std::move(out), limits);
  }

  check_dense_capacity(total, limits);
  const Matrix ma = a.to_matrix(limits);
  const Matrix mb = b.to_matrix(limits);
  const auto n = static_cast<Eigen::Index>(total);
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < ma.rows(); ++i) {
    for (Eigen::Index j = 0; j < ma.cols(); ++j) {
      out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) = ma(i, j) * mb;
    }
  }
  // Kronecker products of valid states are valid; skip the O(D^3) positivity check.
  return DensityState(std::move(dims), total, std::move(out));
}

DensityState partial_trace(const DensityState& s, std::span<const int> keep,
                           const Limits& limits) {
  if (keep.empty()) throw ArgumentError("partial_trace needs a nonempty keep set");
  const IndexSet sorted = normalized_keep(s, keep);
  if (static_cast<int>(sorted.size()) == s.num_subsystems()) return s;

  Dims dims = select_dims(s.dims(), sorted);
  const std::uint64_t total = dims_product(dims);
  const bool hint = s.permutation_invariance_hint();

  switch (s.representation()) {
    case Representation::classical:
      return DensityState::from_probabilities(std::move(dims), marginal_table(s, sorted))
          .with_permutation_invariance_hint(hint);
    case Representation::pure: {
      check_dense_capacity(total, limits);
      const Matrix m = reshape_amplitudes(s, sorted);
      return DensityState(std::move(dims), total, Matrix(m * m.adjoint()))
          .with_permutation_invariance_hint(hint);
    }
    case Representation::dense:
      return DensityState(std::move(dims), total, reduce_dense(s.matrix(), s.dims(), sorted))
          .with_permutation_invariance_hint(hint);
  }
  return s;
}

double hermitian_entropy(const Matrix& m) {
  if (m.rows() == 1) return -xlog2x(m(0, 0).real());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    s -= xlog2x(solver.eigenvalues()(i));
  }
  return s;
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) s -= xlog2x(p);
  return s;
}

double vn_entropy(const DensityState& s) {
  switch (s.representation()) {
    case Representation::pure:
      return 0.0;
    case Representation::classical: {
      double h = 0.0;
      for (const auto& e : s.probabilities()) h -= xlog2x(e.probability);
      return h;
    }
    case Representation::dense:
      return hermitian_entropy(s.matrix());
  }
  return 0.0;
}

double marginal_entropy(const DensityState& s, std::span<const int> keep) {
  if (keep.empty()) return 0.0;
  const IndexSet sorted = normalized_keep(s, keep);
  if (static_cast<int>(sorted.size()) == s.num_subsystems()) return vn_entropy(s);

  switch (s.representation()) {
    case Representation::classical: {
      double h = 0.0;
      for (const auto& e : marginal_table(s, sorted)) h -= xlog2x(e.probability);
      return h;
    }
    case Representation::pure: {
      const Matrix m = reshape_amplitudes(s, sorted);
      if (m.rows() <= m.cols()) return hermitian_entropy(m * m.adjoint());
      return hermitian_entropy(m.adjoint() * m);
    }
    case Representation::dense:
      return hermitian_entropy(reduce_dense(s.matrix(), s.dims(), sorted));
  }
  return 0.0;
}

double marginal_entropy(const DensityState& s, SubsetMask keep) {
  return marginal_entropy(s, indices_of(keep));
}

double relative_entropy(const DensityState& rho, const DensityState& sigma,
                        const Limits& limits) {
  if (rho.dims() != sigma.dims()) throw ArgumentError("relative_entropy: dims differ");

  double value = 0.0;
  if (rho.representation() == Representation::classical &&
      sigma.representation() == Representation::classical) {
    std::unordered_map<std::uint64_t, double> q;
    for (const auto& e : sigma.probabilities()) q.emplace(e.index, e.probability);
    for (const auto& e : rho.probabilities()) {
      const auto it = q.find(e.index);
      const double qi = it == q.end() ? 0.0 : it->second;
      if (qi < tol::kEigenClip) {
        if (e.probability > tol::kSupportWeight) return std::numeric_limits<double>::infinity();
        continue;
      }
      if (e.probability > tol::kEigenClip) {
        value += e.probability * (std::log2(e.probability) - std::log2(qi));
      }
    }
  } else {
    const Matrix r = rho.to_matrix(limits);
    const Matrix sm = sigma.to_matrix(limits);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sm);
    if (solver.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
    const Matrix& v = solver.eigenvectors();
    const Eigen::VectorXd weights = (v.adjoint() * r * v).diagonal().real();
    double cross = 0.0;
    for (Eigen::Index j = 0; j < weights.size(); ++j) {
      const double mu = solver.eigenvalues()(j);
      if (mu < tol::kEigenClip) {
        if (weights(j) > tol::kSupportWeight) return std::numeric_limits<double>::infinity();
        continue;
      }
      cross += weights(j) * std::log2(mu);
    }
    value = -vn_entropy(rho) - cross;
  }
  if (value < 0.0) {
    if (value < -tol::kClamp) {
      throw ConsistencyError("relative entropy came out negative: " + std::to_string(value));
    }
    value = 0.0;
  }
  return value;
}

DensityState refine_subsystem(const DensityState& s, int index, std::span<const int> split) {
  if (index < 0 || index >= s.num_subsystems()) {
    throw ArgumentError("refine_subsystem: index out of range");
  }
  if (split.empty()) throw ArgumentError("refine_subsystem: empty split");
  for (int d : split) {
    if (d < 2) throw ArgumentError("refine_subsystem: split dimensions must be >= 2");
  }
  if (dims_product(split) != static_cast<std::uint64_t>(s.dims()[index])) {
    throw ArgumentError("refine_subsystem: split does not multiply to dims[index]");
  }
  Dims dims;
  dims.insert(dims.end(), s.dims().begin(), s.dims().begin() + index);
  dims.insert(dims.end(), split.begin(), split.end());
  dims.insert(dims.end(), s.dims().begin() + index + 1, s.dims().end());
  return s.with_dims(std::move(dims));
}

DensityState merge_subsystems(const DensityState& s, int first, int count) {
  if (count < 1 || first < 0 || first + count > s.num_subsystems()) {
    throw ArgumentError("merge_subsystems: range out of bounds");
  }
  const std::span<const int> merged(s.dims().data() + first, static_cast<std::size_t>(count));
  const std::uint64_t fused = dims_product(merged);
  if (fused > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw CapacityError("merge_subsystems: fused dimension too large");
  }
  Dims dims;
  dims.insert(dims.end(), s.dims().begin(), s.dims().begin() + first);
  dims.push_back(static_cast<int>(fused));
  dims.insert(dims.end(), s.dims().begin() + first + count, s.dims().end());
  return s.with_dims(std::move(dims));
}

DensityState permute_subsystems(const DensityState& s, std::span<const int> perm) {
  const int n = s.num_subsystems();
  if (static_cast<int>(perm.size()) != n) throw ArgumentError("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw ArgumentError("not a permutation");
    seen[p] = true;
  }
  Dims dims = select_dims(s.dims(), perm);
  const auto new_strides = strides_of(dims);
  const bool hint = s.permutation_invariance_hint();

  switch (s.representation()) {
    case Representation::classical: {
      ProbabilityTable table;
      table.reserve(s.probabilities().size());
      for (const auto& e : s.probabilities()) {
        table.push_back({permuted_index(e.index, s.dims(), perm, new_strides), e.probability});
      }
      return DensityState::from_probabilities(std::move(dims), std::move(table))
          .with_permutation_invariance_hint(hint);
    }
    case Representation::pure: {
      const Vector& psi = s.amplitudes();
      Vector out(psi.size());
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        out(static_cast<Eigen::Index>(
            permuted_index(static_cast<std::uint64_t>(i), s.dims(), perm, new_strides))) =
            psi(i);
      }
      return DensityState(std::move(dims), s.total_dim(), std::move(out))
          .with_permutation_invariance_hint(hint);
    }
    case Representation::dense: {
      const Matrix& m = s.matrix();
      std::vector<Eigen::Index> map(static_cast<std::size_t>(m.rows()));
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        map[i] = static_cast<Eigen::Index>(
            permuted_index(static_cast<std::uint64_t>(i), s.dims(), perm, new_strides));
      }
      Matrix out(m.rows(), m.cols());
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(map[i], map[j]) = m(i, j);
      }
      return DensityState(std::move(dims), s.total_dim(), std::move(out))
          .with_permutation_invariance_hint(hint);
    }
  }
  return s;
}

double max_abs_difference(const DensityState& a, const DensityState& b, const Limits& limits) {
  if (a.dims() != b.dims()) throw ArgumentError("max_abs_difference: dims differ");
  if (a.representation() == Representation::classical &&
      b.representation() == Representation::classical) {
    std::map<std::uint64_t, double> diff;
    for (const auto& e : a.probabilities()) diff[e.index] += e.probability;
    for (const auto& e : b.probabilities()) diff[e.index] -= e.probability;
    double worst = 0.0;
    for (const auto& [index, d] : diff) worst = std::max(worst, std::abs(d));
    return worst;
  }
  return (a.to_matrix(limits) - b.to_matrix(limits)).cwiseAbs().maxCoeff();
}

}  // namespace weave
