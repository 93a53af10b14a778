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

#ifndef CATLOG_COMBINATORICS_HPP
#define CATLOG_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "catlog/exact.hpp"

namespace catlog {

/// Binomial coefficient top choose bottom via the falling-factorial product
/// top(top-1)...(top-bottom+1)/bottom!, reduced at every step so the cost is
/// proportional to `bottom`. Any integer top is accepted.
/// Throws std::invalid_argument for negative `bottom`.
ExactInteger binomial(const ExactInteger& top, std::int64_t bottom);
ExactInteger binomial(std::int64_t top, std::int64_t bottom);

/// Unsigned Stirling cycle numbers c(n,k), 0 <= k <= n <= nmax, built by
/// c(n+1,k) = n c(n,k) + c(n,k-1).
class StirlingTriangle {
 public:
  explicit StirlingTriangle(std::size_t nmax);

  std::size_t nmax() const { return rows_.size() - 1; }

  /// c(n,k); zero when k > n. Throws std::out_of_range when n > nmax().
  const ExactInteger& cycle(std::size_t n, std::size_t k) const;

  /// Copy with a single entry replaced. Used to inject faults into
  /// verification runs; the recurrence no longer holds for the copy.
  StirlingTriangle with_entry(std::size_t n, std::size_t k, ExactInteger value) const;

 private:
  std::vector<std::vector<ExactInteger>> rows_;
};

/// Exact higher-order harmonic numbers H_n^{(i)} = sum_{k<=n} 1/k^i for
/// 0 <= n <= nmax and 1 <= i <= rmax.
class HarmonicTable {
 public:
  HarmonicTable(std::size_t nmax, unsigned rmax);

  std::size_t nmax() const { return nmax_; }
  unsigned rmax() const { return rmax_; }

  /// Throws std::out_of_range outside the table.
  const ExactRational& value(std::size_t n, unsigned order) const;

 private:
  std::size_t nmax_;
  unsigned rmax_;
  // values_[order - 1][n]
  std::vector<std::vector<ExactRational>> values_;
};

struct PartitionBlock {
  unsigned part = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const PartitionBlock&, const PartitionBlock&) = default;
};

/// A partition of `target` as (part, multiplicity) blocks with strictly
/// decreasing parts.
struct Partition {
  unsigned target = 0;
  std::vector<PartitionBlock> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of r, each once, in lexicographically decreasing order of
/// their part lists (r, then r-1 + 1, ..., then 1 + ... + 1).
/// Throws std::invalid_argument for r == 0.
std::vector<Partition> partitions_of(unsigned r);

}  // namespace catlog

#endif  // CATLOG_COMBINATORICS_HPP
