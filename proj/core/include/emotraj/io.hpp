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

#ifndef EMOTRAJ_IO_HPP_
#define EMOTRAJ_IO_HPP_

#include "emotraj/geometry.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace emotraj
{

/// Shortest decimal form that round-trips the double exactly.
std::string format_double(double value);

struct JsonlRecord
{
  std::size_t line{0};
  nlohmann::json value;
};

/// A line that failed to parse, kept so batch runs can report and skip it.
struct JsonlIssue
{
  std::size_t line{0};
  std::string message;
};

struct JsonlFile
{
  std::vector<JsonlRecord> records;
  std::vector<JsonlIssue> issues;
};

/// Reads JSON-lines. Blank lines are skipped; lines that fail to parse
/// are collected as issues instead of aborting the read.
JsonlFile read_jsonl(std::istream & in);
JsonlFile load_jsonl(const std::string & path);

/// Writes content through a temporary file and renames it into place, so
/// a failed run never leaves a partial output file.
void write_text_atomic(const std::string & path, const std::string & content);

/// Accepts either a bare [[x, y], ...] array or {"points": [[x, y], ...]}.
/// Throws ParseError on any other shape and NonFiniteInput via validation.
Trajectory trajectory_from_json(const nlohmann::json & j, const std::string & context = "trajectory");

/// Serializes to the bare [[x, y], ...] form.
nlohmann::json trajectory_to_json(const Trajectory & traj);

/// CSV with a mandatory `x,y` header and one waypoint per row.
Trajectory parse_trajectory_csv(std::istream & in, const std::string & name = "<csv>");
Trajectory load_trajectory_csv(const std::string & path);
std::string trajectory_to_csv(const Trajectory & traj);

}  // namespace emotraj

#endif  // EMOTRAJ_IO_HPP_
