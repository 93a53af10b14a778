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

#include "catlog/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <stdexcept>
#include <tuple>

namespace catlog {

namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

ExactRational sign_of_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

using Params = std::vector<std::pair<std::string, std::int64_t>>;

// First index in [lo, hi] where the two series differ.
std::optional<VerificationFailure> first_mismatch(const Series& lhs, const Series& rhs,
                                                  std::size_t lo, std::size_t hi,
                                                  Params params) {
  for (std::size_t n = lo; n <= hi; ++n) {
    if (lhs[n] != rhs[n]) {
      params.emplace_back("n", as_signed(n));
      return VerificationFailure{std::move(params), lhs[n], rhs[n]};
    }
  }
  return std::nullopt;
}

ExactRational grunberg_from_partitions(std::size_t n, unsigned r,
                                       const std::vector<Partition>& partitions,
                                       const HarmonicTable& harmonic) {
  if (r == 0) return 1;
  ExactRational sum;
  for (const auto& partition : partitions) {
    ExactRational term(1);
    for (const auto& [part, mult] : partition.blocks) {
      const ExactRational scaled =
          harmonic.value(n, part) / ExactRational(static_cast<std::int64_t>(part));
      term *= sign_of_power(mult) * pow(scaled, mult) / ExactRational(factorial(mult));
    }
    sum += term;
  }
  return sign_of_power(r) * sum;
}

}  // namespace

Series log_pow_direct(const ExpansionRequest& req) {
  if (req.p == 0) return Series::constant(1, req.order);
  return pow(log(fuss_catalan_series(req.lam, req.order)), req.p);
}

Series log_pow_stirling(const ExpansionRequest& req, const StirlingTriangle& triangle) {
  const std::size_t p = req.p;
  const ExactInteger p_factorial = factorial(p);
  Series s(req.order);
  for (std::size_t n = p; n <= req.order; ++n) {
    ExactRational coeff;
    for (std::size_t m = p; m <= n; ++m) {
      const ExactInteger& cycles = triangle.cycle(m, p);
      if (cycles.is_zero()) continue;
      coeff += sign_of_power(m - p) * ExactRational(p_factorial * cycles, factorial(m)) *
               u_power_coefficient(m, req.lam, n);
    }
    s[n] = std::move(coeff);
  }
  return s;
}

Series log_pow_stirling(const ExpansionRequest& req) {
  return log_pow_stirling(req, StirlingTriangle(std::max<std::size_t>(req.order, req.p)));
}

Series knuth_rhs(std::size_t order, const HarmonicTable& harmonic) {
  Series s(order);
  for (std::size_t n = 1; n <= order; ++n) {
    const ExactRational diff = harmonic.value(2 * n - 1, 1) - harmonic.value(n, 1);
    s[n] = ExactRational(binomial(as_signed(2 * n), as_signed(n))) * diff /
           ExactRational(as_signed(n));
  }
  return s;
}

Series knuth_rhs(std::size_t order) {
  return knuth_rhs(order, HarmonicTable(order == 0 ? 0 : 2 * order - 1, 1));
}

ExactRational grunberg_stirling(std::size_t n, unsigned r, const HarmonicTable& harmonic) {
  if (r == 0) return 1;
  return grunberg_from_partitions(n, r, partitions_of(r), harmonic);
}

ExactRational grunberg_stirling(std::size_t n, unsigned r) {
  return grunberg_stirling(n, r, HarmonicTable(n, std::max(r, 1U)));
}

ExactRational grunberg_instance(std::size_t n, unsigned r, const HarmonicTable& harmonic) {
  auto h = [&](unsigned order) { return harmonic.value(n, order); };
  auto q = [](std::int64_t num, std::int64_t den) {
    return ExactRational(ExactInteger(num), ExactInteger(den));
  };
  switch (r) {
    case 1:
      return h(1);
    case 2:
      return q(-1, 2) * h(2) + q(1, 2) * pow(h(1), 2);
    case 3:
      return q(1, 3) * h(3) - q(1, 2) * h(2) * h(1) + q(1, 6) * pow(h(1), 3);
    case 4:
      return q(-1, 4) * h(4) + q(1, 3) * h(3) * h(1) + q(1, 8) * pow(h(2), 2) -
             q(1, 4) * h(2) * pow(h(1), 2) + q(1, 24) * pow(h(1), 4);
    default:
      throw std::invalid_argument("grunberg_instance: only r = 1..4 are written out");
  }
}

Series log_pow_harmonic(const ExpansionRequest& req, const HarmonicTable& harmonic) {
  if (req.p == 0) throw std::invalid_argument("log_pow_harmonic: p must be >= 1");
  if (req.lam.value() != kCatalanLambda) {
    throw std::invalid_argument("log_pow_harmonic: only lambda = 2 is supported, got " +
                                std::to_string(req.lam.value()));
  }
  const std::size_t p = req.p;
  const auto partitions =
      p >= 2 ? partitions_of(static_cast<unsigned>(p - 1)) : std::vector<Partition>{};
  const ExactInteger p_factorial = factorial(p);

  // c(m,p)/(m-1)! for m = p..order
  std::vector<ExactRational> scaled_cycles(req.order + 1);
  for (std::size_t m = p; m <= req.order; ++m) {
    scaled_cycles[m] =
        grunberg_from_partitions(m - 1, static_cast<unsigned>(p - 1), partitions, harmonic);
  }

  Series s(req.order);
  for (std::size_t n = p; n <= req.order; ++n) {
    ExactRational coeff;
    for (std::size_t m = p; m <= n; ++m) {
      coeff += sign_of_power(m - p) * scaled_cycles[m] *
               ExactRational(binomial(as_signed(2 * n), as_signed(n - m)));
    }
    s[n] = coeff * ExactRational(p_factorial, ExactInteger(as_signed(n)));
  }
  return s;
}

Series log_pow_harmonic(const ExpansionRequest& req) {
  const std::size_t nmax = req.order == 0 ? 0 : req.order - 1;
  return log_pow_harmonic(req, HarmonicTable(nmax, std::max(req.p, 2U) - 1));
}

std::string VerificationReport::range_string() const {
  std::string out;
  for (const auto& r : range) {
    if (!out.empty()) out += ", ";
    out += r.name + "=" + std::to_string(r.lo);
    if (r.hi != r.lo) out += ".." + std::to_string(r.hi);
  }
  return out;
}

VerificationReport alternating_identity_check(std::size_t nmax) {
  if (nmax < 2) throw std::invalid_argument("alternating_identity_check: nmax must be >= 2");
  VerificationReport report{"alternating-identity", {{"n", 2, as_signed(nmax)}}, std::nullopt};
  const HarmonicTable harmonic(2 * nmax - 1, 1);
  for (std::size_t n = 2; n <= nmax; ++n) {
    const ExactRational lhs = ExactRational(binomial(as_signed(2 * n), as_signed(n))) *
                              (harmonic.value(2 * n - 1, 1) - harmonic.value(n, 1));

    // binom(2n-1, k) for k = n-2 down to 0, stepping k -> k-1.
    const std::int64_t top = as_signed(2 * n - 1);
    ExactInteger binom = binomial(top, as_signed(n - 2));
    ExactRational sum;
    for (std::size_t j = 1; j < n; ++j) {
      const std::int64_t k = as_signed(n - j - 1);
      sum += sign_of_power(j - 1) * ExactRational(binom, ExactInteger(as_signed(j)));
      if (k > 0) {
        binom *= ExactInteger(k);
        binom.divide_exact(ExactInteger(top - k + 1));
      }
    }
    const ExactRational rhs = ExactRational(2) * sum;
    if (lhs != rhs) {
      report.first_failure = VerificationFailure{{{"n", as_signed(n)}}, lhs, rhs};
      break;
    }
  }
  return report;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kAll: return "all";
    case Suite::kRoutes: return "routes";
    case Suite::kKnuth: return "knuth";
    case Suite::kAlternating: return "alternating";
    case Suite::kGrunberg: return "grunberg";
    case Suite::kFunctionalEquation: return "functional-equation";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::kAll, Suite::kRoutes, Suite::kKnuth, Suite::kAlternating,
                  Suite::kGrunberg, Suite::kFunctionalEquation}) {
    if (suite_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::size_t required_stirling_rows(const VerifyConfig& config) {
  return std::max({config.order, config.nmax + 1, static_cast<std::size_t>(config.pmax)});
}

namespace {

VerificationReport sweep_direct_vs_stirling(LambdaParam lam, unsigned pmax, std::size_t order,
                                            const StirlingTriangle& triangle) {
  const std::int64_t l = lam.value();
  VerificationReport report{
      "direct-vs-stirling",
      {{"lambda", l, l}, {"p", 0, pmax}, {"n", 0, as_signed(order)}},
      std::nullopt};
  const Series log_c = log(fuss_catalan_series(lam, order));
  Series direct = Series::constant(1, order);
  for (unsigned p = 0; p <= pmax; ++p) {
    if (p > 0) direct = direct * log_c;
    const Series stirling = log_pow_stirling({p, lam, order}, triangle);
    report.first_failure = first_mismatch(direct, stirling, 0, order, {{"lambda", l}, {"p", p}});
    if (report.first_failure) break;
  }
  return report;
}

VerificationReport sweep_direct_vs_harmonic(unsigned pmax, std::size_t order) {
  VerificationReport report{
      "direct-vs-harmonic",
      {{"lambda", kCatalanLambda, kCatalanLambda}, {"p", 1, pmax}, {"n", 0, as_signed(order)}},
      std::nullopt};
  const LambdaParam lam(kCatalanLambda);
  const HarmonicTable harmonic(order == 0 ? 0 : order - 1, std::max(pmax, 2U) - 1);
  const Series log_c = log(catalan_series(order));
  Series direct = log_c;
  for (unsigned p = 1; p <= pmax; ++p) {
    if (p > 1) direct = direct * log_c;
    const Series via_harmonic = log_pow_harmonic({p, lam, order}, harmonic);
    report.first_failure =
        first_mismatch(direct, via_harmonic, 0, order, {{"lambda", kCatalanLambda}, {"p", p}});
    if (report.first_failure) break;
  }
  return report;
}

VerificationReport sweep_knuth(bool use_stirling, std::size_t order,
                               const StirlingTriangle& triangle) {
  VerificationReport report{use_stirling ? "knuth-vs-stirling" : "knuth-vs-direct",
                            {{"n", 0, as_signed(order)}},
                            std::nullopt};
  const ExpansionRequest req{2, LambdaParam(kCatalanLambda), order};
  const Series lhs = use_stirling ? log_pow_stirling(req, triangle) : log_pow_direct(req);
  report.first_failure = first_mismatch(lhs, knuth_rhs(order), 0, order, {});
  return report;
}

VerificationReport sweep_p1_closed_form(std::size_t order) {
  VerificationReport report{"p1-closed-form", {{"n", 1, as_signed(order)}}, std::nullopt};
  const Series log_c = log(catalan_series(order));
  Series closed(order);
  for (std::size_t n = 1; n <= order; ++n) {
    closed[n] = ExactRational(binomial(as_signed(2 * n), as_signed(n)), ExactInteger(as_signed(2 * n)));
  }
  if (order >= 1) report.first_failure = first_mismatch(log_c, closed, 1, order, {});
  return report;
}

VerificationReport sweep_grunberg_vs_triangle(std::size_t nmax, unsigned rmax,
                                              const StirlingTriangle& triangle) {
  VerificationReport report{"grunberg-vs-triangle",
                            {{"n", 0, as_signed(nmax)}, {"r", 0, rmax}},
                            std::nullopt};
  const HarmonicTable harmonic(nmax, std::max(rmax, 1U));
  for (unsigned r = 0; r <= rmax && !report.first_failure; ++r) {
    const auto partitions = r >= 1 ? partitions_of(r) : std::vector<Partition>{};
    for (std::size_t n = 0; n <= nmax; ++n) {
      const ExactRational lhs =
          grunberg_from_partitions(n, r, partitions, harmonic) * ExactRational(factorial(n));
      const ExactRational rhs(triangle.cycle(n + 1, r + 1));
      if (lhs != rhs) {
        report.first_failure =
            VerificationFailure{{{"r", r}, {"n", as_signed(n)}}, lhs, rhs};
        break;
      }
    }
  }
  return report;
}

VerificationReport sweep_grunberg_instances(std::size_t nmax) {
  VerificationReport report{"grunberg-instances",
                            {{"n", 1, as_signed(nmax)}, {"r", 1, 4}},
                            std::nullopt};
  const HarmonicTable harmonic(nmax, 4);
  for (unsigned r = 1; r <= 4 && !report.first_failure; ++r) {
    const auto partitions = partitions_of(r);
    for (std::size_t n = 1; n <= nmax; ++n) {
      const ExactRational lhs = grunberg_instance(n, r, harmonic);
      const ExactRational rhs = grunberg_from_partitions(n, r, partitions, harmonic);
      if (lhs != rhs) {
        report.first_failure = VerificationFailure{{{"r", r}, {"n", as_signed(n)}}, lhs, rhs};
        break;
      }
    }
  }
  return report;
}

VerificationReport sweep_functional_equation(LambdaParam lam, std::size_t order) {
  const std::int64_t l = lam.value();
  VerificationReport report{"functional-equation",
                            {{"lambda", l, l}, {"n", 0, as_signed(order)}},
                            std::nullopt};
  const Series u = u_power_series_lambda(1, lam, order);
  const Series one_plus_u = Series::constant(1, order) + u;
  const Series rhs = Series::variable(order) * pow(one_plus_u, static_cast<unsigned>(l));
  report.first_failure = first_mismatch(u, rhs, 0, order, {{"lambda", l}});
  if (!report.first_failure) {
    report.first_failure = first_mismatch(one_plus_u, fuss_catalan_series(lam, order), 0, order,
                                          {{"lambda", l}});
  }
  return report;
}

// lambda = 1 gives C_1 = 1/(1-z), so [z^n] log C_1 = 1/n.
VerificationReport sweep_geometric_log(bool use_stirling, std::size_t order,
                                       const StirlingTriangle& triangle) {
  VerificationReport report{use_stirling ? "geometric-log-stirling" : "geometric-log-direct",
                            {{"lambda", 1, 1}, {"n", 0, as_signed(order)}},
                            std::nullopt};
  Series reciprocals(order);
  for (std::size_t n = 1; n <= order; ++n) {
    reciprocals[n] = ExactRational(ExactInteger(1), ExactInteger(as_signed(n)));
  }
  const ExpansionRequest req{1, LambdaParam(1), order};
  const Series lhs = use_stirling ? log_pow_stirling(req, triangle) : log_pow_direct(req);
  report.first_failure = first_mismatch(lhs, reciprocals, 0, order, {{"lambda", 1}});
  return report;
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
  if (a.name != b.name) return a.name < b.name;
  return std::lexicographical_compare(
      a.range.begin(), a.range.end(), b.range.begin(), b.range.end(),
      [](const ParamRange& x, const ParamRange& y) {
        return std::tie(x.name, x.lo, x.hi) < std::tie(y.name, y.lo, y.hi);
      });
}

}  // namespace

std::vector<VerificationReport> verify_suite(Suite suite, const VerifyConfig& config,
                                             const StirlingTriangle& triangle) {
  auto selected = [suite](Suite s) { return suite == Suite::kAll || suite == s; };
  std::vector<std::function<VerificationReport()>> jobs;

  if (selected(Suite::kRoutes)) {
    for (LambdaParam lam : config.lambdas) {
      jobs.emplace_back([&config, &triangle, lam] {
        return sweep_direct_vs_stirling(lam, config.pmax, config.order, triangle);
      });
    }
    if (config.pmax >= 1) {
      jobs.emplace_back([&config] { return sweep_direct_vs_harmonic(config.pmax, config.order); });
    }
  }
  if (selected(Suite::kKnuth)) {
    jobs.emplace_back([&config, &triangle] { return sweep_knuth(false, config.order, triangle); });
    jobs.emplace_back([&config, &triangle] { return sweep_knuth(true, config.order, triangle); });
    jobs.emplace_back([&config] { return sweep_p1_closed_form(config.order); });
  }
  if (selected(Suite::kAlternating)) {
    jobs.emplace_back([&config] { return alternating_identity_check(std::max<std::size_t>(config.nmax, 2)); });
  }
  if (selected(Suite::kGrunberg)) {
    jobs.emplace_back([&config, &triangle] {
      return sweep_grunberg_vs_triangle(config.nmax, config.rmax, triangle);
    });
    jobs.emplace_back([&config] { return sweep_grunberg_instances(std::max<std::size_t>(config.nmax, 1)); });
  }
  if (selected(Suite::kFunctionalEquation)) {
    const std::size_t order = std::max<std::size_t>(config.order, 1);
    for (LambdaParam lam : config.lambdas) {
      jobs.emplace_back([lam, order] { return sweep_functional_equation(lam, order); });
    }
    jobs.emplace_back(
        [&config, &triangle] { return sweep_geometric_log(false, config.order, triangle); });
    jobs.emplace_back(
        [&config, &triangle] { return sweep_geometric_log(true, config.order, triangle); });
  }

  std::vector<std::future<VerificationReport>> pending;
  pending.reserve(jobs.size());
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));

  std::vector<VerificationReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  std::stable_sort(reports.begin(), reports.end(), report_less);
  return reports;
}

std::vector<VerificationReport> verify_all(const VerifyConfig& config) {
  return verify_suite(Suite::kAll, config, StirlingTriangle(required_stirling_rows(config)));
}

}  // namespace catlog
