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

#include <algorithm>
#include <set>

#include "gtest/gtest.h"

#include "oracles.h"
#include "weave/errors.h"
#include "weave/partitions.h"

using namespace weave;

TEST(partitions, counts_match_enumeration) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::uint64_t streamed = 0;
      PartitionStream stream(n, k);
      while (stream.next()) ++streamed;
      EXPECT_EQ(count_partitions(n, k), streamed) << "n=" << n << " k=" << k;
      if (n <= 8) {
        EXPECT_EQ(count_partitions(n, k), oracle::all_partitions(n, k).size());
      }
    }
    EXPECT_EQ(count_partitions(n, n), oracle::bell_number(n));
  }
}

TEST(partitions, known_counts) {
  EXPECT_EQ(count_partitions(4, 2), 10u);  // 1 + 6 + 3
  EXPECT_EQ(count_partitions(5, 5), 52u);
  EXPECT_EQ(count_partitions(25, 25), 4638590332229999353ULL);
  EXPECT_THROW(count_partitions(26, 26), CapacityError);
}

TEST(partitions, stream_yields_distinct_valid_partitions) {
  std::set<std::string> seen;
  PartitionStream stream(6, 3);
  while (stream.next()) {
    const SetPartition p = stream.current();
    EXPECT_LE(p.max_block(), 3);
    SubsetMask all = 0;
    for (SubsetMask m : stream.block_masks()) {
      EXPECT_EQ(all & m, 0u);
      all |= m;
    }
    EXPECT_EQ(all, 0b111111u);
    EXPECT_EQ(p.block_masks(), std::vector<SubsetMask>(stream.block_masks().begin(),
                                                       stream.block_masks().end()));
    EXPECT_TRUE(seen.insert(p.to_string()).second);
  }
  EXPECT_EQ(seen.size(), count_partitions(6, 3));
}

TEST(partitions, canonical_order_runs_coarse_to_fine) {
  PartitionStream stream(4, 4);
  ASSERT_TRUE(stream.next());
  EXPECT_EQ(stream.current().to_string(), "{1,2,3,4}");
  ASSERT_TRUE(stream.next());
  EXPECT_EQ(stream.current().to_string(), "{1,2,3}{4}");
  SetPartition last;
  do {
    last = stream.current();
  } while (stream.next());
  EXPECT_EQ(last.to_string(), "{1}{2}{3}{4}");
}

TEST(partitions, canonical_form) {
  const SetPartition p(4, {{3, 1}, {2}, {0}});
  EXPECT_EQ(p.to_string(), "{1}{2,4}{3}");
  EXPECT_EQ(p, SetPartition(4, {{0}, {1, 3}, {2}}));
  EXPECT_EQ(p.max_block(), 2);
}

TEST(partitions, invalid_blocks_rejected) {
  EXPECT_THROW(SetPartition(3, {{0, 1}}), ArgumentError);
  EXPECT_THROW(SetPartition(3, {{0, 1}, {1, 2}}), ArgumentError);
  EXPECT_THROW(SetPartition(3, {{0, 1, 2}, {}}), ArgumentError);
  EXPECT_THROW(SetPartition(3, {{0, 1, 3}}), ArgumentError);
}

TEST(partitions, compact_partition) {
  EXPECT_EQ(compact_partition(7, 3).to_string(), "{1,2,3}{4,5,6}{7}");
  EXPECT_EQ(compact_partition(6, 3).to_string(), "{1,2,3}{4,5,6}");
  EXPECT_EQ(compact_partition(3, 1).to_string(), "{1}{2}{3}");
  EXPECT_THROW(compact_partition(3, 4), ArgumentError);
}

TEST(partitions, enumeration_capacity) {
  Limits limits;
  limits.max_enumeration_n = 5;
  EXPECT_THROW(PartitionStream(6, 2, limits), CapacityError);
  EXPECT_EQ(enumerate_partitions(5, 2, limits).size(), count_partitions(5, 2));
}
