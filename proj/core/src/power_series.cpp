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

#include "catlog/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace catlog {

Series::Series(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::constant(const ExactRational& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::variable(std::size_t order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

const ExactRational& Series::operator[](std::size_t n) const {
  if (n > order()) {
    throw std::out_of_range("coefficient " + std::to_string(n) + " beyond order " +
                            std::to_string(order()));
  }
  return coeffs_[n];
}

ExactRational& Series::operator[](std::size_t n) {
  return const_cast<ExactRational&>(std::as_const(*this)[n]);
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("cannot extend a series of order " +
                                std::to_string(this->order()) + " to " + std::to_string(order));
  }
  return Series(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series& Series::operator*=(const ExactRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= r.order(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

Series log(const Series& a) {
  if (a[0] != ExactRational(1)) {
    throw std::domain_error("log: constant term must be 1, got " + a[0].to_string());
  }
  Series l(a.order());
  for (std::size_t n = 1; n <= a.order(); ++n) {
    ExactRational acc = ExactRational(static_cast<std::int64_t>(n)) * a[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (l[k].is_zero()) continue;
      acc -= ExactRational(static_cast<std::int64_t>(k)) * l[k] * a[n - k];
    }
    l[n] = acc / ExactRational(static_cast<std::int64_t>(n));
  }
  return l;
}

Series exp(const Series& a) {
  if (!a[0].is_zero()) {
    throw std::domain_error("exp: constant term must be 0, got " + a[0].to_string());
  }
  Series e(a.order());
  e[0] = 1;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    ExactRational acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k].is_zero()) continue;
      acc += ExactRational(static_cast<std::int64_t>(k)) * a[k] * e[n - k];
    }
    e[n] = acc / ExactRational(static_cast<std::int64_t>(n));
  }
  return e;
}

Series pow(const Series& a, unsigned p) {
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (p != 0) {
    if (p & 1U) result = result * base;
    p >>= 1U;
    if (p != 0) base = base * base;
  }
  return result;
}

}  // namespace catlog
