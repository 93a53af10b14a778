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

#ifndef CATLOG_CATALAN_HPP
#define CATLOG_CATALAN_HPP

#include <cstddef>
#include <cstdint>

#include "catlog/exact.hpp"
#include "catlog/power_series.hpp"

namespace catlog {

/// Exponent of the kernel in u = z (1+u)^lambda; a positive integer.
/// lambda = 2 is the Catalan case, lambda = 1 gives 1/(1-z).
class LambdaParam {
 public:
  /// Throws std::invalid_argument for lambda < 1.
  explicit LambdaParam(std::int64_t lambda);

  std::int64_t value() const { return lambda_; }

  friend bool operator==(LambdaParam, LambdaParam) = default;

 private:
  std::int64_t lambda_;
};

inline constexpr std::int64_t kCatalanLambda = 2;

/// C(z) = sum binom(2n,n)/(n+1) z^n.
Series catalan_series(std::size_t order);

/// C_lambda(z) = sum binom(1+lambda n, n)/(1+lambda n) z^n.
Series fuss_catalan_series(LambdaParam lam, std::size_t order);

/// [z^n] u^m where u = z (1+u)^lambda, by Lagrange inversion:
///   (m/n) binom(lambda n, n - m)  for n >= m >= 1,
///   0                             for n < m,
/// and u^0 = 1.
ExactRational u_power_coefficient(std::size_t m, LambdaParam lam, std::size_t n);

/// [z^n] C_lambda(z)^m = binom(lambda n + m, n) m/(lambda n + m), with
/// C_lambda^0 = 1. Note u^m = z^m C_lambda^{lambda m}.
ExactRational fuss_catalan_power_coefficient(std::size_t m, LambdaParam lam, std::size_t n);

/// u^m for the Catalan kernel, from (m/n) binom(2n, n-m).
Series u_power_series(std::size_t m, std::size_t order);

/// u^m for a general kernel exponent, coefficientwise u_power_coefficient.
Series u_power_series_lambda(std::size_t m, LambdaParam lam, std::size_t order);

/// Checks u = z (1+u)^lambda up to z^order for the closed-form u, and that
/// 1 + u equals fuss_catalan_series. Throws std::invalid_argument for
/// order 0.
bool verify_functional_equation(LambdaParam lam, std::size_t order);

}  // namespace catlog

#endif  // CATLOG_CATALAN_HPP
