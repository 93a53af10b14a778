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

#ifndef CATLOG_POWER_SERIES_HPP
#define CATLOG_POWER_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "catlog/exact.hpp"

namespace catlog {

/// Truncated formal power series sum_{n<=order} a_n z^n, known modulo
/// z^{order+1}. Binary operations truncate to the smaller operand order.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Takes ownership of the coefficient list; order is size() - 1.
  /// Throws std::invalid_argument for an empty list.
  explicit Series(std::vector<ExactRational> coeffs);

  static Series constant(const ExactRational& c, std::size_t order);
  /// The series z (zero when order is 0).
  static Series variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const ExactRational> coefficients() const { return coeffs_; }

  /// [z^n]; throws std::out_of_range when n > order().
  const ExactRational& operator[](std::size_t n) const;
  ExactRational& operator[](std::size_t n);

  /// Drops coefficients above `order`. Throws std::invalid_argument when
  /// that would extend the series.
  Series truncated(std::size_t order) const;

  Series operator-() const;
  Series& operator*=(const ExactRational& scalar);

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const ExactRational& scalar) { return a *= scalar; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<ExactRational> coeffs_;
};

/// Formal logarithm of a series with constant term 1, from L' = a'/a:
/// n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
/// Throws std::domain_error when a_0 != 1.
Series log(const Series& a);

/// Formal exponential of a series with constant term 0, from E' = a' E:
/// n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
/// Throws std::domain_error when a_0 != 0.
Series exp(const Series& a);

/// a^p by binary exponentiation; p = 0 gives the constant series 1.
Series pow(const Series& a, unsigned p);

}  // namespace catlog

#endif  // CATLOG_POWER_SERIES_HPP
