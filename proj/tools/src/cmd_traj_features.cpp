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
#include <emotraj/traj_features.hpp>

#include <algorithm>
#include <utility>

namespace emotraj::tools
{

namespace
{

struct FeatureInput
{
  std::size_t line{0};
  nlohmann::json id;
  Trajectory traj;
};

}  // namespace

int run_traj_features(const GlobalOptions & global, const TrajFeaturesOptions & opt)
{
  RunConfig config = base_config(global);
  validate_config(config);

  JsonlFile file = load_jsonl(opt.input);
  std::vector<JsonlIssue> issues = std::move(file.issues);
  std::vector<FeatureInput> inputs;
  for (const auto & record : data_records(file)) {
    try {
      FeatureInput input;
      input.line = record.line;
      input.id = require_id(record.value);
      if (record.value.contains("traj")) {
        input.traj = trajectory_from_json(record.value["traj"], "traj");
      } else if (record.value.contains("points")) {
        input.traj = trajectory_from_json(record.value["points"], "points");
      } else if (record.value.contains("pred")) {
        input.traj = trajectory_from_json(record.value["pred"], "pred");
      } else {
        throw ParseError("record has no trajectory field (traj/points/pred)");
      }
      inputs.push_back(std::move(input));
    } catch (const Error & e) {
      issues.push_back({record.line, e.what()});
    }
  }

  struct Outcome
  {
    bool ok{false};
    FeatureVector features;
    std::string error;
  };
  const auto outcomes = parallel_map(inputs, config.jobs, [&](const FeatureInput & input) {
    Outcome outcome;
    try {
      outcome.features = extract_features(input.traj);
      outcome.ok = true;
    } catch (const std::exception & e) {
      outcome.error = e.what();
    }
    return outcome;
  });

  std::string content = csv_comment("traj-features", config);
  content += "id";
  for (const auto name : kFeatureNames) {
    content += ',';
    content += name;
  }
  content += '\n';

  std::size_t processed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!outcomes[i].ok) {
      issues.push_back({inputs[i].line, outcomes[i].error});
      continue;
    }
    content += id_to_csv(inputs[i].id);
    for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
      content += ',';
      const auto value = outcomes[i].features.by_index(f);
      if (value.has_value()) {
        content += format_double(*value);
      }
      // degenerate features stay as empty cells
    }
    content += '\n';
    ++processed;
  }

  std::sort(issues.begin(), issues.end(), [](const JsonlIssue & a, const JsonlIssue & b) {
    return a.line < b.line;
  });
  emit_output(global, content);
  return report_issues("traj-features", opt.input, processed, issues);
}

}  // namespace emotraj::tools
