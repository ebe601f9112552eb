// Copyright 2026 The dpco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpco/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace dpco {
namespace {

TEST(RngStream, SameSeedAndStreamReproducesBitIdenticalDraws) {
  RngStream a(123, 7);
  RngStream b(123, 7);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(a.next_u64(), b.next_u64());
  }
}

TEST(RngStream, DifferentStreamsDiffer) {
  RngStream a(123, 0);
  RngStream b(123, 1);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    if (a.next_u64() == b.next_u64()) ++equal;
  }
  EXPECT_EQ(equal, 0);
}

TEST(RngStream, ChildStreamsAreDeterministicAndDistinct) {
  RngStream parent(42, 3);
  RngStream c1 = parent.child(0);
  RngStream c1_again = parent.child(0);
  RngStream c2 = parent.child(1);
  EXPECT_EQ(c1.next_u64(), c1_again.next_u64());
  RngStream c1b = parent.child(0);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    if (c1b.next_u64() == c2.next_u64()) ++equal;
  }
  EXPECT_EQ(equal, 0);
}

TEST(RngStream, NextDoubleIsInUnitInterval) {
  RngStream rng(9);
  for (int i = 0; i < 10000; ++i) {
    double x = rng.next_double();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

TEST(RngStream, NextIndexIsUniformChiSquare) {
  RngStream rng(2024);
  constexpr int kBuckets = 10;
  constexpr int kDraws = 100000;
  std::vector<int> counts(kBuckets, 0);
  for (int i = 0; i < kDraws; ++i) {
    ++counts[rng.next_index(kBuckets)];
  }
  double expected = static_cast<double>(kDraws) / kBuckets;
  double chi2 = 0.0;
  for (int c : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  // df = 9, p > 0.001 threshold.
  EXPECT_LT(chi2, 27.88);
}

TEST(RngStream, ShuffleProducesPermutation) {
  RngStream rng(5);
  std::vector<int> values{0, 1, 2, 3, 4, 5, 6, 7};
  auto sorted = values;
  rng.shuffle(values);
  auto shuffled = values;
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, sorted);
}

TEST(RngStream, ShuffleIsRoughlyUniformOverThreeElements) {
  RngStream rng(77);
  constexpr int kDraws = 60000;
  std::vector<int> counts(6, 0);
  for (int i = 0; i < kDraws; ++i) {
    std::vector<int> v{0, 1, 2};
    rng.shuffle(v);
    int code = v[0] * 2 + (v[1] > v[2] ? 1 : 0);
    ++counts[code];
  }
  double expected = kDraws / 6.0;
  double chi2 = 0.0;
  for (int c : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  // df = 5, p > 0.001 threshold.
  EXPECT_LT(chi2, 20.52);
}

}  // namespace
}  // namespace dpco
