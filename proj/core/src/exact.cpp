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

#include "catlog/exact.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace catlog {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

mpz_class parse_mpz(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

ExactInteger ExactInteger::parse(std::string_view text) {
  return ExactInteger(parse_mpz(text));
}

std::int64_t ExactInteger::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits");
  return value_.get_si();
}

ExactInteger& ExactInteger::divide_exact(const ExactInteger& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t())) {
    throw std::invalid_argument("inexact integer division");
  }
  mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return *this;
}

ExactInteger abs(const ExactInteger& x) {
  return ExactInteger(mpz_class(::abs(x.raw())));
}

ExactInteger gcd(const ExactInteger& a, const ExactInteger& b) {
  return ExactInteger(mpz_class(::gcd(a.raw(), b.raw())));
}

ExactInteger factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactInteger(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ExactInteger& x) {
  return os << x.to_string();
}

ExactRational::ExactRational(const ExactInteger& num, const ExactInteger& den)
    : value_(num.raw(), den.raw()) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return ExactRational(ExactInteger::parse(text));
  }
  const auto den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
  }
  return ExactRational(ExactInteger::parse(text.substr(0, slash)), ExactInteger::parse(den));
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return ExactRational(std::move(r));
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

ExactRational pow(const ExactRational& x, unsigned e) {
  ExactRational result(1);
  ExactRational base = x;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& x) {
  return os << x.to_string();
}

}  // namespace catlog
