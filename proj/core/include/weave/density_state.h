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

#ifndef WEAVE_DENSITY_STATE_H
#define WEAVE_DENSITY_STATE_H

#include <complex>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "weave/limits.h"

namespace weave {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Local dimensions of the subsystems, in order. Subsystem 0 is the most significant
/// digit of a flat basis index.
using Dims = std::vector<int>;

/// Ordered list of 0-based subsystem indices.
using IndexSet = std::vector<int>;

/// Bit i set <=> subsystem i belongs to the subset.
using SubsetMask = std::uint64_t;

enum class Representation { dense, pure, classical };

/// One nonzero entry of a classical probability table. `index` is the flat basis index of
/// the digit string (mixed radix, radix dims[i] at position i).
struct ProbabilityEntry {
  std::uint64_t index = 0;
  double probability = 0.0;

  friend bool operator==(const ProbabilityEntry&, const ProbabilityEntry&) = default;
};

using ProbabilityTable = std::vector<ProbabilityEntry>;

/// A normalized state of N subsystems.
///
/// Three storage forms share one interface: a dense density matrix, a pure amplitude
/// vector, and a sparse probability table for classical (diagonal) states. Pure and
/// classical forms are never silently converted; operations that need a matrix call
/// to_matrix(), which is subject to Limits::max_dense_dim.
///
/// Instances are immutable after construction and safe to share across threads.
class DensityState {
 public:
  /// Validates Hermiticity, unit trace and positivity.
  static DensityState from_matrix(Dims dims, Matrix matrix, const Limits& limits = {});
  /// Validates unit norm.
  static DensityState from_amplitudes(Dims dims, Vector amplitudes,
                                      const Limits& limits = {});
  /// Merges duplicate indices, drops exact zeros, sorts by index. Validates
  /// nonnegativity and unit sum.
  static DensityState from_probabilities(Dims dims, ProbabilityTable table);

  const Dims& dims() const { return dims_; }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }
  std::uint64_t total_dim() const { return total_dim_; }
  Representation representation() const;

  /// Storage accessors; each throws ArgumentError when the representation differs.
  const Matrix& matrix() const;
  const Vector& amplitudes() const;
  const ProbabilityTable& probabilities() const;

  /// Dense density matrix for any representation.
  Matrix to_matrix(const Limits& limits = {}) const;

  /// Set by constructors of permutation-symmetric families. A false value means
  /// "unknown", not "asymmetric".
  bool permutation_invariance_hint() const { return symmetric_hint_; }
  DensityState with_permutation_invariance_hint(bool hint) const;

  /// Same storage, relabelled subsystem structure. prod(new_dims) must equal total_dim().
  DensityState with_dims(Dims new_dims) const;

 private:
  using Storage = std::variant<Matrix, Vector, ProbabilityTable>;

  // Trusted constructors of already-valid results skip re-validation.
  friend DensityState tensor_product(const DensityState&, const DensityState&, const Limits&);
  friend DensityState partial_trace(const DensityState&, std::span<const int>, const Limits&);
  friend DensityState permute_subsystems(const DensityState&, std::span<const int>);

  DensityState(Dims dims, std::uint64_t total_dim, Storage storage)
      : dims_(std::move(dims)), total_dim_(total_dim), storage_(std::move(storage)) {}

  Dims dims_;
  std::uint64_t total_dim_ = 1;
  Storage storage_;
  bool symmetric_hint_ = false;
};

/// Product of dims; throws CapacityError past 2^62.
std::uint64_t dims_product(std::span<const int> dims);

SubsetMask mask_of(std::span<const int> indices);
IndexSet indices_of(SubsetMask mask);

/// a (x) b. Representation is preserved when both inputs share it (pure, classical);
/// mixed inputs give a dense result.
DensityState tensor_product(const DensityState& a, const DensityState& b,
                            const Limits& limits = {});

/// Marginal on `keep` (any order of distinct indices is accepted; the result lists
/// subsystems in ascending index order). Pure inputs yield dense marginals unless keep
/// is everything.
DensityState partial_trace(const DensityState& s, std::span<const int> keep,
                           const Limits& limits = {});

/// Von Neumann entropy in bits.
double vn_entropy(const DensityState& s);

/// Entropy of the marginal on `keep` without materializing more than needed. For pure
/// states the smaller of the two Gram matrices is diagonalized.
double marginal_entropy(const DensityState& s, std::span<const int> keep);
double marginal_entropy(const DensityState& s, SubsetMask keep);

/// -sum lambda log2 lambda over eigenvalues of a Hermitian matrix, clipping below
/// tol::kEigenClip.
double hermitian_entropy(const Matrix& m);
double shannon_entropy(std::span<const double> probabilities);

/// S(rho || sigma) in bits, or +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityState& rho, const DensityState& sigma,
                        const Limits& limits = {});

/// Replace subsystem `index` by a cluster with local dimensions `split`.
DensityState refine_subsystem(const DensityState& s, int index, std::span<const int> split);

/// Inverse of refine_subsystem: fuse `count` consecutive subsystems starting at `first`.
DensityState merge_subsystems(const DensityState& s, int first, int count);

/// Reorder subsystems: subsystem j of the result is subsystem perm[j] of the input.
DensityState permute_subsystems(const DensityState& s, std::span<const int> perm);

/// max |a - b| over density-matrix entries (dims must agree).
double max_abs_difference(const DensityState& a, const DensityState& b,
                          const Limits& limits = {});

}  // namespace weave

#endif  // WEAVE_DENSITY_STATE_H
