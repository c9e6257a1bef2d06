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

#ifndef WEAVE_PARTITIONS_H
#define WEAVE_PARTITIONS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weave/density_state.h"
#include "weave/limits.h"

namespace weave {

/// A set partition of {0, ..., N-1} in canonical form: each block sorted ascending,
/// blocks ordered by their smallest element.
class SetPartition {
 public:
  SetPartition() = default;
  /// Canonicalizes, then throws ArgumentError unless the blocks are nonempty, pairwise
  /// disjoint and cover {0..n-1} exactly.
  SetPartition(int n, std::vector<IndexSet> blocks);

  int size() const { return n_; }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  int max_block() const { return max_block_; }
  std::vector<SubsetMask> block_masks() const;

  /// "{1,2}{3}" with 1-based labels.
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<IndexSet> blocks_;
  int max_block_ = 0;
};

/// Lazily enumerates every set partition of {0..n-1} whose blocks all have at most
/// `max_block` elements, in restricted-growth-string order. A stream has one consumer;
/// independent streams may run on different threads.
class PartitionStream {
 public:
  /// Throws CapacityError when n exceeds limits.max_enumeration_n.
  PartitionStream(int n, int max_block, const Limits& limits = {});

  /// Advances to the next partition. Returns false once exhausted.
  bool next();

  /// Block membership of the current partition: labels()[i] is the block of element i.
  std::span<const int> labels() const { return labels_; }
  /// Element masks of the current blocks, ordered by smallest element.
  std::span<const SubsetMask> block_masks() const {
    return std::span<const SubsetMask>(masks_.data(), static_cast<std::size_t>(num_blocks_));
  }
  SetPartition current() const;

 private:
  void assign(int position, int block);
  void unassign(int position);
  void fill_from(int position);

  int n_;
  int max_block_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> labels_;
  std::vector<int> block_sizes_;
  std::vector<SubsetMask> masks_;
  int num_blocks_ = 0;
};

/// Materializes a whole stream; meant for tests and small n.
std::vector<SetPartition> enumerate_partitions(int n, int max_block, const Limits& limits = {});

/// Number of partitions of {0..n-1} with blocks of size <= max_block. Exact for n <= 25.
std::uint64_t count_partitions(int n, int max_block);

/// floor(n/k) contiguous blocks of size k followed by a remainder block of size n mod k.
SetPartition compact_partition(int n, int k);

}  // namespace weave

#endif  // WEAVE_PARTITIONS_H
