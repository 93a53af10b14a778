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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "catlog/catalan.hpp"
#include "catlog/combinatorics.hpp"

namespace catlog::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kSeriesKinds = {
    "catalan",          "fuss-catalan",     "u-power",  "log-pow-direct",
    "log-pow-stirling", "log-pow-harmonic", "knuth-rhs"};

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_string(const VerificationFailure& failure, std::string_view sep) {
  std::string out;
  for (const auto& [key, value] : failure.params) {
    if (!out.empty()) out += sep;
    out += key + "=" + std::to_string(value);
  }
  return out;
}

CoeffsOutput compute_coeffs(const std::string& kind, unsigned p, std::int64_t lambda,
                            std::size_t order) {
  const LambdaParam lam(lambda);
  if (kind == "catalan") return {kind, std::nullopt, std::nullopt, catalan_series(order)};
  if (kind == "fuss-catalan") return {kind, std::nullopt, lambda, fuss_catalan_series(lam, order)};
  if (kind == "knuth-rhs") return {kind, std::nullopt, std::nullopt, knuth_rhs(order)};
  // u-power reads --p as the exponent m of u^m.
  if (kind == "u-power") {
    Series s = lambda == kCatalanLambda ? u_power_series(p, order)
                                        : u_power_series_lambda(p, lam, order);
    return {kind, p, lambda, std::move(s)};
  }
  const ExpansionRequest req{p, lam, order};
  if (kind == "log-pow-direct") return {kind, p, lambda, log_pow_direct(req)};
  if (kind == "log-pow-stirling") return {kind, p, lambda, log_pow_stirling(req)};
  if (kind == "log-pow-harmonic") return {kind, p, lambda, log_pow_harmonic(req)};
  throw std::invalid_argument("unknown series kind '" + kind + "'");
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  out << text;
  out.flush();
  if (output_path.empty()) return;
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + output_path + "' for writing");
  file << text;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::kPlain;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render_coeffs(const CoeffsOutput& output, OutputFormat format) {
  const auto coeffs = output.series.coefficients();
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kPlain:
      for (std::size_t n = 0; n < coeffs.size(); ++n) os << n << ' ' << coeffs[n] << '\n';
      break;
    case OutputFormat::kCsv:
      os << "n,coefficient\n";
      for (std::size_t n = 0; n < coeffs.size(); ++n) os << n << ',' << coeffs[n] << '\n';
      break;
    case OutputFormat::kJson: {
      Json doc;
      doc["kind"] = output.kind;
      if (output.p) doc["p"] = *output.p;
      if (output.lambda) doc["lambda"] = *output.lambda;
      doc["order"] = output.series.order();
      Json list = Json::array();
      for (const auto& c : coeffs) list.push_back(c.to_string());
      doc["coefficients"] = std::move(list);
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_reports(std::string_view suite, const std::vector<VerificationReport>& reports,
                           OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kPlain: {
      std::size_t passed = 0;
      for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.name << " [" << r.range_string() << "]";
        if (r.first_failure) {
          os << " first failure at " << params_string(*r.first_failure, ", ")
             << ": lhs=" << r.first_failure->lhs << " rhs=" << r.first_failure->rhs;
        }
        os << '\n';
        passed += r.passed() ? 1 : 0;
      }
      os << passed << '/' << reports.size() << " reports passed\n";
      break;
    }
    case OutputFormat::kCsv:
      os << "name,range,passed,failure_params,lhs,rhs\n";
      for (const auto& r : reports) {
        os << csv_quote(r.name) << ',' << csv_quote(r.range_string()) << ','
           << (r.passed() ? "true" : "false") << ',';
        if (r.first_failure) {
          os << csv_quote(params_string(*r.first_failure, ";")) << ','
             << r.first_failure->lhs << ',' << r.first_failure->rhs;
        } else {
          os << ",,";
        }
        os << '\n';
      }
      break;
    case OutputFormat::kJson: {
      Json doc;
      doc["suite"] = std::string(suite);
      Json list = Json::array();
      for (const auto& r : reports) {
        Json entry;
        entry["name"] = r.name;
        entry["range"] = r.range_string();
        entry["passed"] = r.passed();
        if (r.first_failure) {
          Json params = Json::object();
          for (const auto& [key, value] : r.first_failure->params) params[key] = value;
          entry["first_failure"] = {{"params", std::move(params)},
                                    {"lhs", r.first_failure->lhs.to_string()},
                                    {"rhs", r.first_failure->rhs.to_string()}};
        }
        list.push_back(std::move(entry));
      }
      doc["reports"] = std::move(list);
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficients of powers of log C(z) for Catalan-type series"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  std::string output_path;
  const std::vector<std::string> formats = {"plain", "json", "csv"};

  auto* coeffs = app.add_subcommand("coeffs", "Dump coefficients 0..order of a series");
  std::string kind;
  unsigned p = 1;
  std::int64_t lambda = kCatalanLambda;
  std::size_t order = 20;
  coeffs->add_option("--kind", kind, "Series to dump")
      ->required()
      ->check(CLI::IsMember(kSeriesKinds));
  coeffs->add_option("--p", p, "Exponent p of (log C)^p, or m of u^m for u-power")
      ->capture_default_str();
  coeffs->add_option("--lambda", lambda, "Kernel exponent lambda >= 1")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  coeffs->add_option("--order", order, "Truncation order N")->capture_default_str();
  coeffs->add_option("--format", format_name, "plain, json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember(formats));
  coeffs->add_option("--output", output_path, "Also write the output to this file");

  auto* verify = app.add_subcommand("verify", "Check the identities by exact evaluation");
  std::string suite_text = "all";
  VerifyConfig config;
  std::vector<std::int64_t> lambdas = {1, 2, 3};
  std::vector<std::size_t> corrupt;
  verify->add_option("--suite", suite_text,
                     "all, routes, knuth, alternating, grunberg or functional-equation")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "routes", "knuth", "alternating", "grunberg",
                             "functional-equation"}));
  verify->add_option("--pmax", config.pmax, "Largest exponent p")->capture_default_str();
  verify->add_option("--lambda", lambdas, "Comma-separated kernel exponents")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--order", config.order, "Truncation order N")->capture_default_str();
  verify->add_option("--nmax", config.nmax, "Upper n for the alternating and Grunberg sweeps")
      ->capture_default_str();
  verify->add_option("--rmax", config.rmax, "Upper r for the Grunberg sweep")
      ->capture_default_str();
  verify->add_option("--format", format_name, "plain, json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember(formats));
  verify->add_option("--output", output_path, "Also write the output to this file");
  verify->add_option("--corrupt-stirling", corrupt,
                     "Fault injection: add 1 to the Stirling entry c(n,k), given as n,k")
      ->delimiter(',')
      ->expected(2);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    const OutputFormat format = parse_format(format_name);
    if (coeffs->parsed()) {
      emit(render_coeffs(compute_coeffs(kind, p, lambda, order), format), output_path, out);
      return kExitOk;
    }

    const Suite suite = parse_suite(suite_text);
    config.lambdas.clear();
    for (auto l : lambdas) config.lambdas.emplace_back(l);
    StirlingTriangle triangle(required_stirling_rows(config));
    if (!corrupt.empty()) {
      const ExactInteger entry = triangle.cycle(corrupt[0], corrupt[1]);
      triangle = triangle.with_entry(corrupt[0], corrupt[1], entry + ExactInteger(1));
    }
    const auto reports = verify_suite(suite, config, triangle);
    emit(render_reports(suite_name(suite), reports, format), output_path, out);
    const bool all_passed =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return all_passed ? kExitOk : kExitIdentityFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitBadArguments;
}

}  // namespace catlog::cli
