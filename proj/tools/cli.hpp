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

#ifndef CATLOG_TOOLS_CLI_HPP
#define CATLOG_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catlog/identities.hpp"
#include "catlog/power_series.hpp"

namespace catlog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitBadArguments = 2;

enum class OutputFormat { kPlain, kJson, kCsv };

/// Throws std::invalid_argument for anything but plain, json or csv.
OutputFormat parse_format(std::string_view name);

struct CoeffsOutput {
  std::string kind;
  std::optional<unsigned> p;
  std::optional<std::int64_t> lambda;
  Series series;
};

std::string render_coeffs(const CoeffsOutput& output, OutputFormat format);
std::string render_reports(std::string_view suite, const std::vector<VerificationReport>& reports,
                           OutputFormat format);

/// Runs the command line `args` (args[0] is the program name). Output goes
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catlog::cli

#endif  // CATLOG_TOOLS_CLI_HPP
