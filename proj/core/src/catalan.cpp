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

#include "catlog/catalan.hpp"

#include <stdexcept>
#include <string>

#include "catlog/combinatorics.hpp"

namespace catlog {

namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

LambdaParam::LambdaParam(std::int64_t lambda) : lambda_(lambda) {
  if (lambda < 1) {
    throw std::invalid_argument("lambda must be a positive integer, got " +
                                std::to_string(lambda));
  }
}

Series catalan_series(std::size_t order) {
  Series s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    s[n] = ExactRational(binomial(as_signed(2 * n), as_signed(n)), ExactInteger(as_signed(n + 1)));
  }
  return s;
}

Series fuss_catalan_series(LambdaParam lam, std::size_t order) {
  Series s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    const std::int64_t top = 1 + lam.value() * as_signed(n);
    s[n] = ExactRational(binomial(top, as_signed(n)), ExactInteger(top));
  }
  return s;
}

ExactRational u_power_coefficient(std::size_t m, LambdaParam lam, std::size_t n) {
  if (m == 0) return n == 0 ? ExactRational(1) : ExactRational();
  if (n < m) return {};
  return ExactRational(
      binomial(lam.value() * as_signed(n), as_signed(n - m)) * ExactInteger(as_signed(m)),
      ExactInteger(as_signed(n)));
}

ExactRational fuss_catalan_power_coefficient(std::size_t m, LambdaParam lam, std::size_t n) {
  if (m == 0) return n == 0 ? ExactRational(1) : ExactRational();
  const std::int64_t top = lam.value() * as_signed(n) + as_signed(m);
  return ExactRational(binomial(top, as_signed(n)) * ExactInteger(as_signed(m)),
                       ExactInteger(top));
}

Series u_power_series(std::size_t m, std::size_t order) {
  if (m == 0) return Series::constant(1, order);
  Series s(order);
  for (std::size_t n = m; n <= order; ++n) {
    s[n] = ExactRational(ExactInteger(as_signed(m)) * binomial(as_signed(2 * n), as_signed(n - m)),
                         ExactInteger(as_signed(n)));
  }
  return s;
}

Series u_power_series_lambda(std::size_t m, LambdaParam lam, std::size_t order) {
  Series s(order);
  for (std::size_t n = 0; n <= order; ++n) s[n] = u_power_coefficient(m, lam, n);
  return s;
}

bool verify_functional_equation(LambdaParam lam, std::size_t order) {
  if (order == 0) throw std::invalid_argument("verify_functional_equation: order must be >= 1");
  const Series u = u_power_series_lambda(1, lam, order);
  const Series one_plus_u = Series::constant(1, order) + u;
  const Series rhs =
      Series::variable(order) * pow(one_plus_u, static_cast<unsigned>(lam.value()));
  return u == rhs && one_plus_u == fuss_catalan_series(lam, order);
}

}  // namespace catlog
