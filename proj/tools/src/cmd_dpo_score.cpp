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
#include <emotraj/preference.hpp>

#include <algorithm>
#include <utility>

namespace emotraj::tools
{

namespace
{

struct ScoreInput
{
  std::size_t line{0};
  nlohmann::json id;
  double logp_preferred{0.0};
  double logp_rejected{0.0};
};

double number_field(const nlohmann::json & record, const char * key)
{
  if (!record.contains(key) || !record[key].is_number()) {
    throw ParseError(std::string("record needs a numeric '") + key + "'");
  }
  return record[key].get<double>();
}

}  // namespace

int run_dpo_score(const GlobalOptions & global, const DpoScoreOptions & opt)
{
  RunConfig config = base_config(global);
  if (opt.dpo_beta) {
    config.dpo_beta = *opt.dpo_beta;
  }
  validate_config(config);

  JsonlFile file = load_jsonl(opt.input);
  std::vector<JsonlIssue> issues = std::move(file.issues);
  std::vector<ScoreInput> inputs;
  for (const auto & record : data_records(file)) {
    try {
      ScoreInput input;
      input.line = record.line;
      input.id = require_id(record.value);
      input.logp_preferred = number_field(record.value, "logp_preferred");
      input.logp_rejected = number_field(record.value, "logp_rejected");
      inputs.push_back(std::move(input));
    } catch (const Error & e) {
      issues.push_back({record.line, e.what()});
    }
  }

  struct Outcome
  {
    bool ok{false};
    double margin{0.0};
    double loss{0.0};
    std::string error;
  };
  const DpoConfig dpo = config.dpo_config();
  const auto outcomes = parallel_map(inputs, config.jobs, [&](const ScoreInput & input) {
    Outcome outcome;
    try {
      outcome.margin = reward_margin(input.logp_preferred, input.logp_rejected);
      outcome.loss = dpo_loss(input.logp_preferred, input.logp_rejected, dpo);
      outcome.ok = true;
    } catch (const std::exception & e) {
      outcome.error = e.what();
    }
    return outcome;
  });

  std::string content = csv_comment("dpo-score", config);
  content += "id,margin,loss\n";
  double margin_sum = 0.0;
  double loss_sum = 0.0;
  std::size_t processed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!outcomes[i].ok) {
      issues.push_back({inputs[i].line, outcomes[i].error});
      continue;
    }
    content += id_to_csv(inputs[i].id);
    content += ',' + format_double(outcomes[i].margin);
    content += ',' + format_double(outcomes[i].loss);
    content += '\n';
    margin_sum += outcomes[i].margin;
    loss_sum += outcomes[i].loss;
    ++processed;
  }
  if (processed > 0) {
    const auto n = static_cast<double>(processed);
    content += "mean," + format_double(margin_sum / n) + ',' + format_double(loss_sum / n) + '\n';
  }

  std::sort(issues.begin(), issues.end(), [](const JsonlIssue & a, const JsonlIssue & b) {
    return a.line < b.line;
  });
  emit_output(global, content);
  return report_issues("dpo-score", opt.input, processed, issues);
}

}  // namespace emotraj::tools
