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

#include "commands.hpp"

#include <emotraj/errors.hpp>
#include <emotraj/parallel.hpp>
#include <emotraj/traj_metrics.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace emotraj::tools
{

namespace
{

struct EvalInput
{
  std::size_t line{0};
  nlohmann::json id;
  Trajectory pred;
  std::vector<Trajectory> gts;
};

Trajectory pick_trajectory(const nlohmann::json & record, const char * const * keys, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i) {
    if (record.contains(keys[i])) {
      return trajectory_from_json(record[keys[i]], keys[i]);
    }
  }
  std::string wanted;
  for (std::size_t i = 0; i < n; ++i) {
    wanted += (i ? "/" : "") + std::string(keys[i]);
  }
  throw ParseError("record has no trajectory field (" + wanted + ")");
}

std::vector<Trajectory> pick_gts(const nlohmann::json & record)
{
  if (record.contains("gts")) {
    const auto & gts = record["gts"];
    if (!gts.is_array() || gts.empty()) {
      throw ParseError("'gts' must be a non-empty array of trajectories");
    }
    std::vector<Trajectory> out;
    out.reserve(gts.size());
    for (const auto & g : gts) {
      out.push_back(trajectory_from_json(g, "gts entry"));
    }
    return out;
  }
  if (record.contains("gt")) {
    return {trajectory_from_json(record["gt"], "gt")};
  }
  if (record.contains("trajs")) {
    const auto & trajs = record["trajs"];
    if (!trajs.is_array() || trajs.empty()) {
      throw ParseError("'trajs' must be a non-empty array of trajectories");
    }
    std::vector<Trajectory> out;
    out.reserve(trajs.size());
    for (const auto & g : trajs) {
      out.push_back(trajectory_from_json(g, "trajs entry"));
    }
    return out;
  }
  static const char * keys[] = {"traj", "points"};
  return {pick_trajectory(record, keys, 2)};
}

std::vector<EvalInput> parse_combined(
  const std::vector<JsonlRecord> & records, std::vector<JsonlIssue> & issues)
{
  std::vector<EvalInput> inputs;
  for (const auto & record : records) {
    try {
      EvalInput input;
      input.line = record.line;
      input.id = require_id(record.value);
      static const char * pred_keys[] = {"pred", "traj", "points"};
      input.pred = pick_trajectory(record.value, pred_keys, 3);
      input.gts = pick_gts(record.value);
      inputs.push_back(std::move(input));
    } catch (const Error & e) {
      issues.push_back({record.line, e.what()});
    }
  }
  return inputs;
}

// Split mode: match --pred records to --gt records by id, preserving the
// prediction file's order. Any unmatched id on either side is fatal.
std::vector<EvalInput> parse_split(
  const std::string & pred_path, const std::string & gt_path, std::vector<JsonlIssue> & issues)
{
  JsonlFile pred_file = load_jsonl(pred_path);
  JsonlFile gt_file = load_jsonl(gt_path);
  for (const auto & issue : pred_file.issues) {
    issues.push_back(issue);
  }
  // Ground-truth parse problems cannot be attributed to one output row, so
  // they are fatal rather than skippable.
  if (!gt_file.issues.empty()) {
    std::ostringstream os;
    os << gt_path << ":" << gt_file.issues.front().line << ": " << gt_file.issues.front().message;
    throw ParseError(os.str());
  }

  std::map<std::string, std::vector<Trajectory>> gt_by_id;
  for (const auto & record : data_records(gt_file)) {
    const nlohmann::json id = require_id(record.value);
    const std::string key = id.dump();
    if (!gt_by_id.emplace(key, pick_gts(record.value)).second) {
      throw IdMismatch(gt_path + ": duplicate id " + key);
    }
  }

  std::vector<EvalInput> inputs;
  std::set<std::string> seen;
  for (const auto & record : data_records(pred_file)) {
    try {
      EvalInput input;
      input.line = record.line;
      input.id = require_id(record.value);
      static const char * pred_keys[] = {"pred", "traj", "points"};
      input.pred = pick_trajectory(record.value, pred_keys, 3);
      const std::string key = input.id.dump();
      if (!seen.insert(key).second) {
        throw IdMismatch(pred_path + ": duplicate id " + key);
      }
      const auto it = gt_by_id.find(key);
      if (it == gt_by_id.end()) {
        throw IdMismatch("id " + key + " has no ground-truth record");
      }
      input.gts = it->second;
      inputs.push_back(std::move(input));
    } catch (const IdMismatch &) {
      throw;
    } catch (const Error & e) {
      issues.push_back({record.line, e.what()});
    }
  }

  std::vector<std::string> unmatched;
  for (const auto & [key, trajs] : gt_by_id) {
    if (seen.find(key) == seen.end()) {
      unmatched.push_back(key);
    }
  }
  if (!unmatched.empty()) {
    std::string list;
    for (std::size_t i = 0; i < unmatched.size() && i < 10; ++i) {
      list += (i ? ", " : "") + unmatched[i];
    }
    if (unmatched.size() > 10) {
      list += ", ...";
    }
    throw IdMismatch("ground-truth ids missing from predictions: " + list);
  }
  return inputs;
}

}  // namespace

int run_traj_eval(const GlobalOptions & global, const TrajEvalOptions & opt)
{
  RunConfig config = base_config(global);
  if (!opt.pa_gates.empty()) {
    config.pa_gates = opt.pa_gates;
  }
  if (opt.pa_mode) {
    config.pa_mode = pa_mode_from_string(*opt.pa_mode);
  }
  if (opt.multi_gt) {
    config.multi_gt = multi_gt_from_string(*opt.multi_gt);
  }
  if (opt.resample_points) {
    config.resample_points = *opt.resample_points;
  }
  validate_config(config);

  const bool split = !opt.pred.empty();
  if (split == !opt.input.empty()) {
    throw ConfigError("give either an INPUT file or both --pred and --gt");
  }
  if (split && opt.gt.empty()) {
    throw ConfigError("--pred requires --gt");
  }

  std::vector<JsonlIssue> issues;
  std::vector<EvalInput> inputs;
  std::string input_name;
  if (split) {
    input_name = opt.pred;
    inputs = parse_split(opt.pred, opt.gt, issues);
  } else {
    input_name = opt.input;
    JsonlFile file = load_jsonl(opt.input);
    issues = std::move(file.issues);
    inputs = parse_combined(data_records(file), issues);
  }

  struct Outcome
  {
    bool ok{false};
    MetricResult result;
    std::string error;
  };
  const auto outcomes = parallel_map(inputs, config.jobs, [&](const EvalInput & input) {
    Outcome outcome;
    try {
      Trajectory pred = input.pred;
      std::vector<Trajectory> gts = input.gts;
      if (config.resample_points >= 2) {
        pred = resample_uniform(pred, config.resample_points);
        for (auto & gt : gts) {
          gt = resample_uniform(gt, config.resample_points);
        }
      }
      outcome.result =
        evaluate_multi_gt(pred, gts, config.pa_gates, config.multi_gt, config.pa_mode);
      outcome.ok = true;
    } catch (const std::exception & e) {
      outcome.error = e.what();
    }
    return outcome;
  });

  std::string content = csv_comment("traj-eval", config);
  content += "id,ade,frechet,sspd,dtw,fde";
  for (const double gate : config.pa_gates) {
    content += ",pa_" + format_double(gate);
  }
  content += '\n';

  const std::size_t width = 5 + config.pa_gates.size();
  std::vector<double> sums(width, 0.0);
  std::size_t processed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!outcomes[i].ok) {
      issues.push_back({inputs[i].line, outcomes[i].error});
      continue;
    }
    const MetricResult & r = outcomes[i].result;
    std::vector<double> row = {r.ade, r.frechet, r.sspd, r.dtw, r.fde};
    for (const auto & [gate, value] : r.pa) {
      row.push_back(value);
    }
    content += id_to_csv(inputs[i].id);
    for (std::size_t c = 0; c < width; ++c) {
      content += ',' + format_double(row[c]);
      sums[c] += row[c];
    }
    content += '\n';
    ++processed;
  }
  if (processed > 0) {
    content += "mean";
    for (std::size_t c = 0; c < width; ++c) {
      content += ',' + format_double(sums[c] / static_cast<double>(processed));
    }
    content += '\n';
  }

  std::sort(issues.begin(), issues.end(), [](const JsonlIssue & a, const JsonlIssue & b) {
    return a.line < b.line;
  });
  emit_output(global, content);
  return report_issues("traj-eval", input_name, processed, issues);
}

}  // namespace emotraj::tools
