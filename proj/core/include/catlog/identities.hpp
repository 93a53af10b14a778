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

// Coefficients of (log C_lambda(z))^p by three independent routes, plus the
// auxiliary identities that connect them:
//
//   direct    series_log / series_pow applied to C_lambda(z)
//   stirling  sum_{p<=m<=n} (p!/m!) (-1)^{m-p} c(m,p) [z^n] u^m
//   harmonic  the stirling route with c(m,p)/(m-1)! rewritten through
//             harmonic numbers and partitions of p-1 (Catalan kernel only)
//
// All comparisons are exact.

#ifndef CATLOG_IDENTITIES_HPP
#define CATLOG_IDENTITIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catlog/catalan.hpp"
#include "catlog/combinatorics.hpp"
#include "catlog/exact.hpp"
#include "catlog/power_series.hpp"

namespace catlog {

struct ExpansionRequest {
  unsigned p = 1;
  LambdaParam lam{kCatalanLambda};
  std::size_t order = 20;
};

/// (log C_lambda)^p by literal series algebra.
Series log_pow_direct(const ExpansionRequest& req);

/// (log C_lambda)^p from the Stirling cycle sum. The triangle must cover
/// n <= req.order; the overload without one builds it.
Series log_pow_stirling(const ExpansionRequest& req, const StirlingTriangle& triangle);
Series log_pow_stirling(const ExpansionRequest& req);

/// binom(2n,n) (H_{2n-1} - H_n)/n for n >= 1, zero constant term. The table
/// must cover H_{2 order - 1}.
Series knuth_rhs(std::size_t order, const HarmonicTable& harmonic);
Series knuth_rhs(std::size_t order);

/// c(n+1, r+1)/n! as the signed sum over partitions of r of products of
/// (-1)^{i_j}/i_j! (H_n^{(r_j)}/r_j)^{i_j}. r = 0 yields 1. The table must
/// cover H_n^{(r)}.
ExactRational grunberg_stirling(std::size_t n, unsigned r, const HarmonicTable& harmonic);
ExactRational grunberg_stirling(std::size_t n, unsigned r);

/// The explicit harmonic polynomials for r = 1..4, written out term by term.
/// Throws std::invalid_argument for other r.
ExactRational grunberg_instance(std::size_t n, unsigned r, const HarmonicTable& harmonic);

/// The stirling route with c(m,p)/(m-1)! supplied by grunberg_stirling.
/// Throws std::invalid_argument for p = 0 or lambda != 2. The table must
/// cover n <= order - 1 and orders <= p - 1.
Series log_pow_harmonic(const ExpansionRequest& req, const HarmonicTable& harmonic);
Series log_pow_harmonic(const ExpansionRequest& req);

struct ParamRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

struct VerificationFailure {
  std::vector<std::pair<std::string, std::int64_t>> params;
  ExactRational lhs;
  ExactRational rhs;
};

/// Outcome of one identity sweep. passed() holds exactly when no failure was
/// recorded.
struct VerificationReport {
  std::string name;
  std::vector<ParamRange> range;
  std::optional<VerificationFailure> first_failure;

  bool passed() const { return !first_failure.has_value(); }
  /// "p=0..5, lambda=2, n=0..60"
  std::string range_string() const;
};

/// binom(2n,n)(H_{2n-1} - H_n) against 2 sum_{1<=j<n} (-1)^{j-1}/j
/// binom(2n-1, n-j-1), for every 2 <= n <= nmax. Throws
/// std::invalid_argument for nmax < 2.
VerificationReport alternating_identity_check(std::size_t nmax);

enum class Suite { kAll, kRoutes, kKnuth, kAlternating, kGrunberg, kFunctionalEquation };

std::string_view suite_name(Suite suite);
/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);

struct VerifyConfig {
  unsigned pmax = 5;
  std::vector<LambdaParam> lambdas{LambdaParam(1), LambdaParam(2), LambdaParam(3)};
  std::size_t order = 20;
  std::size_t nmax = 100;
  unsigned rmax = 8;
};

/// Smallest Stirling triangle verify_suite needs for `config`.
std::size_t required_stirling_rows(const VerifyConfig& config);

/// Runs the selected identity sweeps. Sweeps run concurrently; the result is
/// sorted by report name, then by parameter range.
std::vector<VerificationReport> verify_suite(Suite suite, const VerifyConfig& config,
                                             const StirlingTriangle& triangle);
std::vector<VerificationReport> verify_all(const VerifyConfig& config);

}  // namespace catlog

#endif  // CATLOG_IDENTITIES_HPP
