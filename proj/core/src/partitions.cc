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

#include "weave/partitions.h"

#include <algorithm>
#include <array>

#include "weave/errors.h"

namespace weave {

SetPartition::SetPartition(int n, std::vector<IndexSet> blocks) : n_(n) {
  if (n < 1 || n > 64) throw ArgumentError("partition size must be in [1, 64]");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw ArgumentError("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    for (int i : block) {
      if (i < 0 || i >= n) throw ArgumentError("partition element out of range");
      if (seen[static_cast<std::size_t>(i)]) throw ArgumentError("partition blocks overlap");
      seen[static_cast<std::size_t>(i)] = true;
      ++covered;
    }
    max_block_ = std::max(max_block_, static_cast<int>(block.size()));
  }
  if (covered != n) throw ArgumentError("partition blocks do not cover every element");
  std::sort(blocks.begin(), blocks.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
}

std::vector<SubsetMask> SetPartition::block_masks() const {
  std::vector<SubsetMask> masks;
  masks.reserve(blocks_.size());
  for (const auto& block : blocks_) masks.push_back(mask_of(block));
  return masks;
}

std::string SetPartition::to_string() const {
  std::string out;
  for (const auto& block : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i] + 1);
    }
    out += '}';
  }
  return out;
}

PartitionStream::PartitionStream(int n, int max_block, const Limits& limits)
    : n_(n), max_block_(max_block) {
  if (n < 1) throw ArgumentError("partition stream needs n >= 1");
  if (max_block < 1 || max_block > n) throw ArgumentError("max_block must be in [1, n]");
  if (n > limits.max_enumeration_n) {
    throw CapacityError("partition enumeration capped at n = " +
                        std::to_string(limits.max_enumeration_n));
  }
  labels_.assign(static_cast<std::size_t>(n), -1);
  block_sizes_.assign(static_cast<std::size_t>(n), 0);
  masks_.assign(static_cast<std::size_t>(n), 0);
}

void PartitionStream::assign(int position, int block) {
  labels_[position] = block;
  if (block_sizes_[block]++ == 0) ++num_blocks_;
  masks_[block] |= SubsetMask{1} << position;
}

void PartitionStream::unassign(int position) {
  const int block = labels_[position];
  labels_[position] = -1;
  if (--block_sizes_[block] == 0) --num_blocks_;
  masks_[block] &= ~(SubsetMask{1} << position);
}

// Smallest restricted-growth completion: each element joins the first block with room.
void PartitionStream::fill_from(int position) {
  for (int p = position; p < n_; ++p) {
    int block = 0;
    while (block < num_blocks_ && block_sizes_[block] >= max_block_) ++block;
    assign(p, block);
  }
}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    fill_from(0);
    return true;
  }
  // Element 0 is always in block 0; walk back from the tail looking for a bumpable label.
  for (int p = n_ - 1; p >= 1; --p) {
    const int current = labels_[p];
    unassign(p);
    // After removing the tail, blocks 0..num_blocks_-1 are used by the prefix and
    // num_blocks_ is the label of a fresh block.
    for (int candidate = current + 1; candidate <= num_blocks_; ++candidate) {
      if (candidate == num_blocks_ || block_sizes_[candidate] < max_block_) {
        assign(p, candidate);
        fill_from(p + 1);
        return true;
      }
    }
  }
  done_ = true;
  return false;
}

SetPartition PartitionStream::current() const {
  std::vector<IndexSet> blocks(static_cast<std::size_t>(num_blocks_));
  for (int i = 0; i < n_; ++i) blocks[static_cast<std::size_t>(labels_[i])].push_back(i);
  return SetPartition(n_, std::move(blocks));
}

std::vector<SetPartition> enumerate_partitions(int n, int max_block, const Limits& limits) {
  PartitionStream stream(n, max_block, limits);
  std::vector<SetPartition> out;
  while (stream.next()) out.push_back(stream.current());
  return out;
}

std::uint64_t count_partitions(int n, int max_block) {
  if (n < 1) throw ArgumentError("count_partitions needs n >= 1");
  if (max_block < 1 || max_block > n) throw ArgumentError("max_block must be in [1, n]");
  if (n > 25) throw CapacityError("count_partitions is exact only up to n = 25");
  // binom[i][j] for i <= 25
  std::array<std::array<std::uint64_t, 26>, 26> binom{};
  for (int i = 0; i <= 25; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  // ways[m]: partitions of m labelled elements. The block holding the first element has
  // size s and takes s-1 companions from the remaining m-1.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int s = 1; s <= std::min(max_block, m); ++s) ways[m] += binom[m - 1][s - 1] * ways[m - s];
  }
  return ways[static_cast<std::size_t>(n)];
}

SetPartition compact_partition(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw ArgumentError("compact_partition needs 1 <= k <= n");
  std::vector<IndexSet> blocks;
  for (int start = 0; start < n; start += k) {
    IndexSet block;
    for (int i = start; i < std::min(n, start + k); ++i) block.push_back(i);
    blocks.push_back(std::move(block));
  }
  return SetPartition(n, std::move(blocks));
}

}  // namespace weave
