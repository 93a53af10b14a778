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

#ifndef CATLOG_TESTS_TEST_UTIL_HPP
#define CATLOG_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "catlog/exact.hpp"
#include "catlog/power_series.hpp"

namespace catlog::testing {

inline ExactRational q(std::int64_t num, std::int64_t den = 1) {
  return ExactRational(ExactInteger(num), ExactInteger(den));
}

inline Series series_of(std::vector<ExactRational> coeffs) { return Series(std::move(coeffs)); }

/// Small random rationals; numerator in [-range, range], denominator in
/// [1, range].
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed, std::int64_t range = 20) : rng_(seed), range_(range) {}

  ExactRational operator()() {
    std::uniform_int_distribution<std::int64_t> num(-range_, range_);
    std::uniform_int_distribution<std::int64_t> den(1, range_);
    return q(num(rng_), den(rng_));
  }

  ExactRational nonzero() {
    for (;;) {
      auto x = (*this)();
      if (!x.is_zero()) return x;
    }
  }

  /// Series of the given order with the given constant term.
  Series series(std::size_t order, const ExactRational& constant) {
    Series s(order);
    s[0] = constant;
    for (std::size_t n = 1; n <= order; ++n) s[n] = (*this)();
    return s;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::int64_t range_;
};

inline bool is_normalized(const ExactRational& x) {
  return x.denominator() > ExactInteger(0) &&
         gcd(abs(x.numerator()), x.denominator()) == ExactInteger(1);
}

}  // namespace catlog::testing

#endif  // CATLOG_TESTS_TEST_UTIL_HPP
