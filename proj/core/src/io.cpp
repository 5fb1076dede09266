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

#include "emotraj/io.hpp"

#include "emotraj/errors.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

namespace emotraj
{

namespace
{

std::string strip_cr(std::string line)
{
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

std::string trim(const std::string & s)
{
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && (s[begin] == ' ' || s[begin] == '\t')) {
    ++begin;
  }
  while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t')) {
    --end;
  }
  return s.substr(begin, end - begin);
}

bool parse_double_field(const std::string & field, double & out)
{
  const std::string t = trim(field);
  const char * first = t.data();
  const char * last = t.data() + t.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc() && result.ptr == last;
}

}  // namespace

std::string format_double(double value)
{
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

JsonlFile read_jsonl(std::istream & in)
{
  JsonlFile file;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (trim(line).empty()) {
      continue;
    }
    nlohmann::json value = nlohmann::json::parse(line, nullptr, false);
    if (value.is_discarded()) {
      file.issues.push_back({line_no, "invalid JSON"});
      continue;
    }
    file.records.push_back({line_no, std::move(value)});
  }
  return file;
}

JsonlFile load_jsonl(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open");
  }
  return read_jsonl(in);
}

void write_text_atomic(const std::string & path, const std::string & content)
{
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(tmp + ": cannot open for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      throw Error(tmp + ": write failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(path + ": atomic rename failed: " + ec.message());
  }
}

Trajectory trajectory_from_json(const nlohmann::json & j, const std::string & context)
{
  const nlohmann::json * points = &j;
  if (j.is_object()) {
    const auto it = j.find("points");
    if (it == j.end()) {
      throw ParseError(context + ": object form needs a \"points\" array");
    }
    points = &*it;
  }
  if (!points->is_array()) {
    throw ParseError(context + ": expected an array of [x, y] pairs");
  }
  Trajectory traj;
  traj.points.reserve(points->size());
  for (const auto & entry : *points) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw ParseError(context + ": each waypoint must be a [x, y] number pair");
    }
    traj.points.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  validate_trajectory(traj);
  return traj;
}

nlohmann::json trajectory_to_json(const Trajectory & traj)
{
  nlohmann::json out = nlohmann::json::array();
  for (const auto & p : traj.points) {
    out.push_back(nlohmann::json::array({p.x, p.y}));
  }
  return out;
}

Trajectory parse_trajectory_csv(std::istream & in, const std::string & name)
{
  std::string raw;
  if (!std::getline(in, raw)) {
    throw ParseError(name + ": empty file, expected an x,y header");
  }
  if (trim(strip_cr(raw)) != "x,y") {
    throw ParseError(name + ":1: header must be exactly 'x,y'");
  }
  Trajectory traj;
  std::size_t line_no = 1;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (trim(line).empty()) {
      continue;
    }
    const std::size_t comma = line.find(',');
    std::ostringstream where;
    where << name << ":" << line_no;
    if (comma == std::string::npos) {
      throw ParseError(where.str() + ": expected two comma-separated values");
    }
    double x = 0.0;
    double y = 0.0;
    if (!parse_double_field(line.substr(0, comma), x) ||
        !parse_double_field(line.substr(comma + 1), y)) {
      throw ParseError(where.str() + ": non-numeric waypoint");
    }
    traj.points.push_back({x, y});
  }
  validate_trajectory(traj);
  return traj;
}

Trajectory load_trajectory_csv(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open");
  }
  return parse_trajectory_csv(in, path);
}

std::string trajectory_to_csv(const Trajectory & traj)
{
  std::string out = "x,y\n";
  for (const auto & p : traj.points) {
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += '\n';
  }
  return out;
}

}  // namespace emotraj
