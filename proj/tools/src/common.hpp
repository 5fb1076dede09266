// Copyright 2026 The emotraj authors
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

#ifndef EMOTRAJ_TOOLS_COMMON_HPP_
#define EMOTRAJ_TOOLS_COMMON_HPP_

#include <emotraj/config.hpp>
#include <emotraj/io.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace emotraj::tools
{

/// Flags shared by every subcommand. jobs = 0 means "not overridden".
struct GlobalOptions
{
  std::string config_path;
  std::size_t jobs{0};
  std::string output_path;
};

/// Builds the effective config: defaults, then the config file (when
/// given), then the --jobs override. Validation happens at the call site
/// after subcommand flags are applied.
RunConfig base_config(const GlobalOptions & global);

/// Writes to --output atomically, or to stdout when no path was given.
void emit_output(const GlobalOptions & global, const std::string & content);

/// JSONL meta header carrying the effective config for provenance.
std::string meta_line(const std::string & command, const RunConfig & config);

/// CSV comment header carrying the same provenance.
std::string csv_comment(const std::string & command, const RunConfig & config);

/// Records minus any {"_meta": ...} header lines.
std::vector<JsonlRecord> data_records(const JsonlFile & file);

/// Prints the per-record skip report to stderr and returns the exit code:
/// 0 when nothing was skipped, 2 otherwise.
int report_issues(
  const std::string & command, const std::string & input_name, std::size_t processed,
  const std::vector<JsonlIssue> & issues);

/// Extracts a string-or-number "id" field; throws ParseError otherwise.
nlohmann::json require_id(const nlohmann::json & record);

/// CSV-safe rendering of an id value (quotes fields containing , " or \n).
std::string id_to_csv(const nlohmann::json & id);

/// Fixed-precision helpers for report tables (printf-style, locale-free).
std::string fixed(double value, int digits);

}  // namespace emotraj::tools

#endif  // EMOTRAJ_TOOLS_COMMON_HPP_
