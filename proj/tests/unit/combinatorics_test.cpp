// Copyright 2026 The catlog Authors
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

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "catlog/combinatorics.hpp"
#include "test_util.hpp"

namespace catlog {
namespace {

using testing::q;

TEST(BinomialTest, Examples) {
  EXPECT_EQ(binomial(4, 2), ExactInteger(6));
  EXPECT_EQ(binomial(10, 5), ExactInteger(252));
  EXPECT_EQ(binomial(7, 2), ExactInteger(21));
  EXPECT_EQ(binomial(9, 0), ExactInteger(1));
  EXPECT_EQ(binomial(3, 5), ExactInteger(0));
  EXPECT_EQ(binomial(-2, 3), ExactInteger(-4));
  EXPECT_THROW(binomial(4, -1), std::invalid_argument);
}

TEST(BinomialTest, MatchesFactorialQuotient) {
  for (std::int64_t t = 0; t <= 60; ++t) {
    for (std::int64_t b = 0; b <= t; ++b) {
      ExactInteger expected = factorial(t);
      expected.divide_exact(factorial(b) * factorial(t - b));
      ASSERT_EQ(binomial(t, b), expected) << t << " choose " << b;
    }
  }
}

TEST(BinomialTest, PascalRuleOnRandomInputs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> top(1, 400);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t t = top(rng);
    const std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, t)(rng);
    EXPECT_EQ(binomial(t, b), binomial(t - 1, b - 1) + binomial(t - 1, b));
  }
}

TEST(StirlingTriangleTest, Examples) {
  const StirlingTriangle t(10);
  EXPECT_EQ(t.cycle(5, 1), ExactInteger(24));
  EXPECT_EQ(t.cycle(4, 2), ExactInteger(11));
  EXPECT_EQ(t.cycle(0, 0), ExactInteger(1));
  EXPECT_EQ(t.cycle(3, 5), ExactInteger(0));
  EXPECT_EQ(t.cycle(10, 3), ExactInteger(1172700));
  EXPECT_THROW(t.cycle(11, 1), std::out_of_range);
}

TEST(StirlingTriangleTest, BoundariesRecurrenceAndRowSums) {
  const std::size_t nmax = 80;
  const StirlingTriangle t(nmax);
  for (std::size_t n = 0; n <= nmax; ++n) {
    EXPECT_EQ(t.cycle(n, n), ExactInteger(1));
    if (n >= 1) EXPECT_TRUE(t.cycle(n, 0).is_zero());
    ExactInteger row_sum;
    for (std::size_t k = 0; k <= n; ++k) row_sum += t.cycle(n, k);
    EXPECT_EQ(row_sum, factorial(n)) << "row " << n;
    if (n < nmax) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        EXPECT_EQ(t.cycle(n + 1, k),
                  ExactInteger(static_cast<std::int64_t>(n)) * t.cycle(n, k) + t.cycle(n, k - 1));
      }
    }
  }
}

TEST(StirlingTriangleTest, FirstTwoColumnsAgainstFactorialAndHarmonic) {
  const std::size_t nmax = 60;
  const StirlingTriangle t(nmax);
  const HarmonicTable h(nmax, 1);
  for (std::size_t n = 2; n <= nmax; ++n) {
    EXPECT_EQ(t.cycle(n, 1), factorial(n - 1));
    EXPECT_EQ(ExactRational(t.cycle(n, 2)), ExactRational(factorial(n - 1)) * h.value(n - 1, 1));
  }
}

TEST(StirlingTriangleTest, WithEntryLeavesOriginalIntact) {
  const StirlingTriangle t(6);
  const auto corrupted = t.with_entry(3, 2, ExactInteger(4));
  EXPECT_EQ(t.cycle(3, 2), ExactInteger(3));
  EXPECT_EQ(corrupted.cycle(3, 2), ExactInteger(4));
  EXPECT_THROW(t.with_entry(3, 4, ExactInteger(1)), std::out_of_range);
}

TEST(HarmonicTableTest, Examples) {
  const HarmonicTable h(10, 4);
  EXPECT_EQ(h.value(3, 1), q(11, 6));
  EXPECT_EQ(h.value(2, 2), q(5, 4));
  for (unsigned i = 1; i <= 4; ++i) EXPECT_EQ(h.value(0, i), q(0));
  EXPECT_THROW(h.value(11, 1), std::out_of_range);
  EXPECT_THROW(h.value(1, 5), std::out_of_range);
  EXPECT_THROW(h.value(1, 0), std::out_of_range);
}

TEST(HarmonicTableTest, Recurrence) {
  const HarmonicTable h(50, 5);
  for (unsigned i = 1; i <= 5; ++i) {
    for (std::size_t n = 1; n <= 50; ++n) {
      const auto inv = q(1, static_cast<std::int64_t>(n));
      EXPECT_EQ(h.value(n, i), h.value(n - 1, i) + pow(inv, i));
    }
  }
}

std::vector<unsigned> expand(const Partition& p) {
  std::vector<unsigned> parts;
  for (const auto& b : p.blocks) parts.insert(parts.end(), b.multiplicity, b.part);
  return parts;
}

// Every composition of r (one per bit pattern of r-1 cut points), sorted
// into decreasing order and deduplicated.
std::set<std::vector<unsigned>> brute_force_partitions(unsigned r) {
  std::set<std::vector<unsigned>> out;
  for (std::uint32_t mask = 0; mask < (1U << (r - 1)); ++mask) {
    std::vector<unsigned> parts;
    unsigned run = 1;
    for (unsigned i = 0; i + 1 < r; ++i) {
      if (mask & (1U << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.insert(parts);
  }
  return out;
}

TEST(PartitionsTest, FourMatchesListedOrder) {
  const auto parts = partitions_of(4);
  const std::vector<std::vector<PartitionBlock>> expected = {
      {{4, 1}}, {{3, 1}, {1, 1}}, {{2, 2}}, {{2, 1}, {1, 2}}, {{1, 4}}};
  ASSERT_EQ(parts.size(), expected.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    EXPECT_EQ(parts[i].target, 4U);
    EXPECT_EQ(parts[i].blocks, expected[i]);
  }
}

TEST(PartitionsTest, One) {
  const auto parts = partitions_of(1);
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts[0].blocks, (std::vector<PartitionBlock>{{1, 1}}));
  EXPECT_THROW(partitions_of(0), std::invalid_argument);
}

TEST(PartitionsTest, AgreesWithBruteForceAndIsCanonical) {
  const std::vector<std::size_t> counts = {1, 2, 3, 5, 7, 11, 15};
  for (unsigned r = 1; r <= 12; ++r) {
    const auto parts = partitions_of(r);
    const auto oracle = brute_force_partitions(r);
    if (r <= counts.size()) EXPECT_EQ(oracle.size(), counts[r - 1]);
    ASSERT_EQ(parts.size(), oracle.size()) << "r = " << r;

    std::vector<std::vector<unsigned>> lists;
    for (const auto& p : parts) {
      unsigned total = 0;
      for (std::size_t j = 0; j < p.blocks.size(); ++j) {
        EXPECT_GE(p.blocks[j].multiplicity, 1U);
        if (j > 0) EXPECT_GT(p.blocks[j - 1].part, p.blocks[j].part);
        total += p.blocks[j].part * p.blocks[j].multiplicity;
      }
      EXPECT_EQ(total, r);
      lists.push_back(expand(p));
    }
    EXPECT_TRUE(std::is_sorted(lists.begin(), lists.end(), std::greater<>()));
    EXPECT_EQ(std::set<std::vector<unsigned>>(lists.begin(), lists.end()), oracle);
  }
}

}  // namespace
}  // namespace catlog
