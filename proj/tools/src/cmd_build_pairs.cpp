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
#include <charconv>
#include <utility>

namespace emotraj::tools
{

namespace
{

struct PairRecord
{
  std::size_t line{0};
  nlohmann::json id;
  PreferenceInput input;
};

VadVector parse_vad(const nlohmann::json & j, const std::string & where)
{
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    throw ParseError(where + " must be a [v,a,d] number triple");
  }
  const VadVector vad{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  if (!is_valid(vad)) {
    throw ParseError(where + " outside [0,1]^3");
  }
  return vad;
}

CommandVariant parse_variant(const nlohmann::json & j, const std::string & where)
{
  if (!j.is_object() || !j.contains("command") || !j["command"].is_string() ||
      !j.contains("vad")) {
    throw ParseError(where + " needs 'command' and 'vad'");
  }
  CommandVariant variant;
  variant.command = j["command"].get<std::string>();
  variant.vad = parse_vad(j["vad"], where + ".vad");
  return variant;
}

PairRecord parse_record(const JsonlRecord & record)
{
  PairRecord out;
  out.line = record.line;
  out.id = require_id(record.value);
  const auto & value = record.value;
  out.input.id = out.id.is_string() ? out.id.get<std::string>() : out.id.dump();

  if (!value.contains("original")) {
    throw ParseError("record needs 'original'");
  }
  out.input.set.original = parse_variant(value["original"], "original");

  if (!value.contains("variants") || !value["variants"].is_array()) {
    throw ParseError("record needs a 'variants' array");
  }
  std::size_t k = 0;
  for (const auto & v : value["variants"]) {
    out.input.set.variants.push_back(parse_variant(v, "variants[" + std::to_string(k) + "]"));
    ++k;
  }

  if (!value.contains("gt_traj")) {
    throw ParseError("record needs 'gt_traj'");
  }
  out.input.gt_traj = trajectory_from_json(value["gt_traj"], "gt_traj");

  if (value.contains("rejected_trajs")) {
    const auto & rejected = value["rejected_trajs"];
    if (!rejected.is_object()) {
      throw ParseError("'rejected_trajs' must map variant index -> trajectory");
    }
    for (const auto & [key, traj] : rejected.items()) {
      std::size_t index = 0;
      const auto result = std::from_chars(key.data(), key.data() + key.size(), index);
      if (result.ec != std::errc() || result.ptr != key.data() + key.size()) {
        throw ParseError("rejected_trajs key '" + key + "' is not a variant index");
      }
      out.input.rejected_trajs[index] =
        trajectory_from_json(traj, "rejected_trajs[" + key + "]");
    }
  }
  return out;
}

}  // namespace

int run_build_pairs(const GlobalOptions & global, const BuildPairsOptions & opt)
{
  RunConfig config = base_config(global);
  validate_config(config);

  JsonlFile file = load_jsonl(opt.input);
  std::vector<JsonlIssue> issues = std::move(file.issues);
  std::vector<PairRecord> inputs;
  for (const auto & record : data_records(file)) {
    try {
      inputs.push_back(parse_record(record));
    } catch (const Error & e) {
      issues.push_back({record.line, e.what()});
    }
  }

  struct Outcome
  {
    bool ok{false};
    std::string text;
    std::string error;
  };
  const auto outcomes = parallel_map(inputs, config.jobs, [&](const PairRecord & record) {
    Outcome outcome;
    try {
      const auto pairs = build_pairs({record.input});
      const PreferencePair & pair = pairs.front();
      nlohmann::ordered_json out;
      out["id"] = record.id;
      out["negative_index"] = pair.negative_index;
      out["vad_deviation"] = pair.vad_deviation;
      out["preferred"] = trajectory_to_json(pair.preferred);
      out["rejected"] = trajectory_to_json(pair.rejected);
      outcome.text = out.dump() + "\n";
      outcome.ok = true;
    } catch (const std::exception & e) {
      outcome.error = e.what();
    }
    return outcome;
  });

  std::string content = meta_line("build-pairs", config);
  std::size_t processed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (outcomes[i].ok) {
      content += outcomes[i].text;
      ++processed;
    } else {
      issues.push_back({inputs[i].line, outcomes[i].error});
    }
  }
  std::sort(issues.begin(), issues.end(), [](const JsonlIssue & a, const JsonlIssue & b) {
    return a.line < b.line;
  });
  emit_output(global, content);
  return report_issues("build-pairs", opt.input, processed, issues);
}

}  // namespace emotraj::tools
