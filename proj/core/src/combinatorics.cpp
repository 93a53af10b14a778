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

#include "catlog/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace catlog {

ExactInteger binomial(const ExactInteger& top, std::int64_t bottom) {
  if (bottom < 0) {
    throw std::invalid_argument("binomial: negative lower index " + std::to_string(bottom));
  }
  // After step i the accumulator is top choose (i+1), an integer, so every
  // division is exact.
  ExactInteger result(1);
  for (std::int64_t i = 0; i < bottom; ++i) {
    result *= top - ExactInteger(i);
    result.divide_exact(ExactInteger(i + 1));
  }
  return result;
}

ExactInteger binomial(std::int64_t top, std::int64_t bottom) {
  return binomial(ExactInteger(top), bottom);
}

StirlingTriangle::StirlingTriangle(std::size_t nmax) {
  rows_.reserve(nmax + 1);
  rows_.push_back({ExactInteger(1)});
  for (std::size_t n = 0; n < nmax; ++n) {
    const auto& prev = rows_.back();
    std::vector<ExactInteger> row(n + 2);
    const ExactInteger factor(static_cast<std::int64_t>(n));
    for (std::size_t k = 1; k <= n + 1; ++k) {
      if (k <= n) row[k] = factor * prev[k];
      row[k] += prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

const ExactInteger& StirlingTriangle::cycle(std::size_t n, std::size_t k) const {
  static const ExactInteger zero;
  if (n > nmax()) {
    throw std::out_of_range("Stirling triangle covers n <= " + std::to_string(nmax()) +
                            ", requested n = " + std::to_string(n));
  }
  return k > n ? zero : rows_[n][k];
}

StirlingTriangle StirlingTriangle::with_entry(std::size_t n, std::size_t k,
                                              ExactInteger value) const {
  if (n > nmax() || k > n) {
    throw std::out_of_range("Stirling entry (" + std::to_string(n) + "," + std::to_string(k) +
                            ") is not stored");
  }
  StirlingTriangle copy = *this;
  copy.rows_[n][k] = std::move(value);
  return copy;
}

HarmonicTable::HarmonicTable(std::size_t nmax, unsigned rmax)
    : nmax_(nmax), rmax_(rmax), values_(rmax) {
  for (unsigned order = 1; order <= rmax; ++order) {
    auto& column = values_[order - 1];
    column.reserve(nmax + 1);
    column.emplace_back(0);
    for (std::size_t n = 1; n <= nmax; ++n) {
      const ExactRational inv_n(ExactInteger(1), ExactInteger(static_cast<std::int64_t>(n)));
      column.push_back(column.back() + pow(inv_n, order));
    }
  }
}

const ExactRational& HarmonicTable::value(std::size_t n, unsigned order) const {
  if (order == 0 || order > rmax_ || n > nmax_) {
    throw std::out_of_range("harmonic table covers n <= " + std::to_string(nmax_) +
                            ", 1 <= order <= " + std::to_string(rmax_) + "; requested H_" +
                            std::to_string(n) + "^(" + std::to_string(order) + ")");
  }
  return values_[order - 1][n];
}

namespace {

void enumerate_partitions(unsigned remaining, unsigned max_part, Partition& current,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    for (unsigned mult = remaining / part; mult >= 1; --mult) {
      current.blocks.push_back({part, mult});
      enumerate_partitions(remaining - part * mult, part - 1, current, out);
      current.blocks.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned r) {
  if (r == 0) throw std::invalid_argument("partitions_of: r must be positive");
  std::vector<Partition> out;
  Partition current{r, {}};
  enumerate_partitions(r, r, current, out);
  return out;
}

}  // namespace catlog
