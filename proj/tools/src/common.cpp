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

#include "common.hpp"

#include <emotraj/errors.hpp>

#include <cstdio>
#include <iostream>

namespace emotraj::tools
{

RunConfig base_config(const GlobalOptions & global)
{
  RunConfig config;
  if (!global.config_path.empty()) {
    config = load_run_config(global.config_path, config);
  }
  if (global.jobs > 0) {
    config.jobs = global.jobs;
  }
  return config;
}

void emit_output(const GlobalOptions & global, const std::string & content)
{
  if (global.output_path.empty()) {
    std::cout << content;
    std::cout.flush();
  } else {
    write_text_atomic(global.output_path, content);
  }
}

std::string meta_line(const std::string & command, const RunConfig & config)
{
  nlohmann::ordered_json meta;
  meta["tool"] = "emotraj";
  meta["command"] = command;
  meta["config"] = nlohmann::ordered_json::parse(config_provenance(config));
  nlohmann::ordered_json line;
  line["_meta"] = meta;
  return line.dump() + "\n";
}

std::string csv_comment(const std::string & command, const RunConfig & config)
{
  return "# emotraj " + command + " config=" + config_provenance(config) + "\n";
}

std::vector<JsonlRecord> data_records(const JsonlFile & file)
{
  std::vector<JsonlRecord> out;
  out.reserve(file.records.size());
  for (const auto & record : file.records) {
    if (record.value.is_object() && record.value.contains("_meta")) {
      continue;
    }
    out.push_back(record);
  }
  return out;
}

int report_issues(
  const std::string & command, const std::string & input_name, std::size_t processed,
  const std::vector<JsonlIssue> & issues)
{
  if (issues.empty()) {
    return 0;
  }
  std::cerr << "emotraj " << command << ": skipped " << issues.size() << " of "
            << (processed + issues.size()) << " records\n";
  for (const auto & issue : issues) {
    std::cerr << "  " << input_name << ":" << issue.line << ": " << issue.message << "\n";
  }
  return 2;
}

nlohmann::json require_id(const nlohmann::json & record)
{
  if (!record.is_object()) {
    throw ParseError("record must be a JSON object");
  }
  const auto it = record.find("id");
  if (it == record.end()) {
    throw ParseError("record is missing 'id'");
  }
  if (!it->is_string() && !it->is_number()) {
    throw ParseError("'id' must be a string or number");
  }
  return *it;
}

std::string id_to_csv(const nlohmann::json & id)
{
  std::string text = id.is_string() ? id.get<std::string>() : id.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') {
      quoted += "\"\"";
    } else {
      quoted += c;
    }
  }
  quoted += '"';
  return quoted;
}

std::string fixed(double value, int digits)
{
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace emotraj::tools
