// Copyright 2026 The qmpc Authors
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

#include "qmpc/oracle.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace qmpc;

TEST(PairwiseAnd, Examples) {
  EXPECT_EQ(pairwise_and({0, 0, 0, 0}), 0);
  EXPECT_EQ(pairwise_and({1, 1}), 1);
  EXPECT_EQ(pairwise_and({1, 1, 1, 1}), 0);
  EXPECT_EQ(pairwise_and({1}), 0);
}

TEST(PrefixForm, Examples) {
  EXPECT_EQ(prefix_form({0, 1}), 0);
  EXPECT_EQ(prefix_form({1, 0, 1}), 1);
  EXPECT_EQ(prefix_form({1}), 0);
}

TEST(Oracle, RejectsEmptyInput) {
  EXPECT_THROW(pairwise_and(BitVector{}), std::invalid_argument);
  EXPECT_THROW(prefix_form(BitVector{}), std::invalid_argument);
}

TEST(BitVector, RejectsNonBits) {
  EXPECT_THROW(BitVector({0, 2}), std::invalid_argument);
  EXPECT_THROW(BitVector::parse("10a1"), std::invalid_argument);
  EXPECT_THROW(BitVector::parse(""), std::invalid_argument);
  EXPECT_EQ(BitVector::parse("1101"), BitVector({1, 1, 0, 1}));
}

TEST(TruthTable, SmallCases) {
  auto t1 = truth_table(1);
  ASSERT_EQ(t1.size(), 2u);
  EXPECT_EQ(t1.at(BitVector{0}), 0);
  EXPECT_EQ(t1.at(BitVector{1}), 0);

  auto t2 = truth_table(2);
  for (const auto& [x, f] : t2) EXPECT_EQ(f, x == BitVector({1, 1}) ? 1 : 0) << x.str();
}

TEST(TruthTable, FourInputsHaveTenOnes) {
  // Weights 2 and 3 give C(w,2) odd: C(4,2) + C(4,3) = 6 + 4 inputs.
  int ones = 0;
  for (const auto& [x, f] : truth_table(4)) ones += f;
  EXPECT_EQ(ones, 10);
}

TEST(TruthTable, RejectsOutOfRange) {
  EXPECT_THROW(truth_table(0), std::invalid_argument);
  EXPECT_THROW(truth_table(21), std::invalid_argument);
}

TEST(OracleProperties, FormsAgreeAndMatchWeightFormulaUpTo16) {
  for (int n = 1; n <= 16; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BitVector x = BitVector::from_index(v, static_cast<std::size_t>(n));
      const std::size_t w = x.weight();
      const Bit by_weight = static_cast<Bit>((w * (w - (w > 0 ? 1 : 0)) / 2) & 1U);
      const Bit f = pairwise_and(x);
      ASSERT_EQ(f, prefix_form(x)) << x.str();
      ASSERT_EQ(f, by_weight) << x.str();
    }
  }
}

TEST(OracleProperties, NonLinear) {
  BitVector x{1, 0}, y{0, 1}, zero{0, 0};
  EXPECT_NE(pairwise_and(x ^ y), pairwise_and(x) ^ pairwise_and(y) ^ pairwise_and(zero));
}

TEST(OracleProperties, PermutationInvariant) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    std::vector<Bit> bits(8);
    for (auto& b : bits) b = static_cast<Bit>(rng() & 1U);
    std::vector<Bit> shuffled = bits;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(pairwise_and(BitVector(bits)), pairwise_and(BitVector(shuffled)));
  }
}
