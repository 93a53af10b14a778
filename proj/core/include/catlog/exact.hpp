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

#ifndef CATLOG_EXACT_HPP
#define CATLOG_EXACT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace catlog {

/// Signed arbitrary-precision integer.
class ExactInteger {
 public:
  ExactInteger() = default;
  ExactInteger(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
  explicit ExactInteger(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static ExactInteger parse(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const { return value_.fits_slong_p(); }
  std::int64_t to_int64() const;
  std::string to_string() const { return value_.get_str(); }

  const mpz_class& raw() const { return value_; }

  ExactInteger operator-() const { return ExactInteger(mpz_class(-value_)); }

  ExactInteger& operator+=(const ExactInteger& o) { value_ += o.value_; return *this; }
  ExactInteger& operator-=(const ExactInteger& o) { value_ -= o.value_; return *this; }
  ExactInteger& operator*=(const ExactInteger& o) { value_ *= o.value_; return *this; }

  /// Division that is known to leave no remainder. Throws std::domain_error
  /// on a zero divisor and std::invalid_argument if the division is inexact.
  ExactInteger& divide_exact(const ExactInteger& divisor);

  friend ExactInteger operator+(ExactInteger a, const ExactInteger& b) { return a += b; }
  friend ExactInteger operator-(ExactInteger a, const ExactInteger& b) { return a -= b; }
  friend ExactInteger operator*(ExactInteger a, const ExactInteger& b) { return a *= b; }

  friend bool operator==(const ExactInteger& a, const ExactInteger& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

ExactInteger abs(const ExactInteger& x);
ExactInteger gcd(const ExactInteger& a, const ExactInteger& b);
ExactInteger factorial(std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const ExactInteger& x);

/// Arbitrary-precision rational held in lowest terms with a positive
/// denominator. Zero is 0/1. Every operation returns a reduced value, so
/// equality is structural.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
  ExactRational(const ExactInteger& v) : value_(v.raw()) {}       // NOLINT(implicit)
  /// Throws std::domain_error when `den` is zero.
  ExactRational(const ExactInteger& num, const ExactInteger& den);

  /// Accepts "num/den" or "num". Throws std::invalid_argument on malformed
  /// text and std::domain_error on a zero denominator.
  static ExactRational parse(std::string_view text);

  ExactInteger numerator() const { return ExactInteger(value_.get_num()); }
  ExactInteger denominator() const { return ExactInteger(value_.get_den()); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "num/den" in lowest terms; integers print as "num".
  std::string to_string() const;

  /// Throws std::domain_error for zero.
  ExactRational reciprocal() const;

  ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error when `o` is zero.
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit ExactRational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

/// x^e for a machine-width exponent; e = 0 gives 1 (including 0^0).
ExactRational pow(const ExactRational& x, unsigned e);

std::ostream& operator<<(std::ostream& os, const ExactRational& x);

}  // namespace catlog

#endif  // CATLOG_EXACT_HPP
