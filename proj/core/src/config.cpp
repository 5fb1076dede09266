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

#include "emotraj/config.hpp"

#include "emotraj/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace emotraj
{

std::string to_string(PaMode mode)
{
  switch (mode) {
    case PaMode::kFinalPoint:
      return "final_point";
    case PaMode::kPerPointMean:
      return "per_point_mean";
  }
  throw Error("unreachable pa mode");
}

PaMode pa_mode_from_string(const std::string & name)
{
  if (name == "final_point") {
    return PaMode::kFinalPoint;
  }
  if (name == "per_point_mean") {
    return PaMode::kPerPointMean;
  }
  throw ConfigError("unknown pa mode '" + name + "'");
}

std::string to_string(MultiGtAggregation agg)
{
  switch (agg) {
    case MultiGtAggregation::kMin:
      return "min";
    case MultiGtAggregation::kMean:
      return "mean";
  }
  throw Error("unreachable aggregation");
}

MultiGtAggregation multi_gt_from_string(const std::string & name)
{
  if (name == "min") {
    return MultiGtAggregation::kMin;
  }
  if (name == "mean") {
    return MultiGtAggregation::kMean;
  }
  throw ConfigError("unknown multi-gt aggregation '" + name + "'");
}

LabelConfig RunConfig::label_config() const
{
  LabelConfig out;
  out.alpha = alpha;
  out.beta_ex = beta_ex;
  out.min_label_score = min_label_score;
  out.neutral = neutral_vad;
  return out;
}

DpoConfig RunConfig::dpo_config() const
{
  return DpoConfig{dpo_beta};
}

DirectionBoundaries RunConfig::direction_boundaries() const
{
  DirectionBoundaries b;
  b.ahead = direction_ahead_deg * std::numbers::pi / 180.0;
  b.side = direction_side_deg * std::numbers::pi / 180.0;
  return b;
}

namespace
{

VadVector vad_from_json(const nlohmann::json & j, const std::string & where)
{
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    throw ConfigError(where + " must be a [v,a,d] number triple");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

RunConfig parse_run_config(std::istream & in, const std::string & name, const RunConfig & base)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception & e) {
    throw ConfigError(name + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError(name + ": config must be a JSON object");
  }

  RunConfig config = base;
  const std::set<std::string> known = {
    "alpha",          "beta_ex",
    "min_label_score", "neutral_vad",
    "dpo_beta",       "pa_gates",
    "pa_mode",        "multi_gt",
    "direction_ahead_deg", "direction_side_deg",
    "detection_threshold", "resample_points",
    "correlation",    "jobs",
    "seed"};
  for (const auto & [key, value] : doc.items()) {
    if (known.find(key) == known.end()) {
      throw ConfigError(name + ": unknown config key '" + key + "'");
    }
    try {
      if (key == "alpha") {
        config.alpha = value.get<double>();
      } else if (key == "beta_ex") {
        config.beta_ex = value.get<double>();
      } else if (key == "min_label_score") {
        config.min_label_score = value.get<double>();
      } else if (key == "neutral_vad") {
        config.neutral_vad = vad_from_json(value, name + ": neutral_vad");
      } else if (key == "dpo_beta") {
        config.dpo_beta = value.get<double>();
      } else if (key == "pa_gates") {
        config.pa_gates = value.get<std::vector<double>>();
      } else if (key == "pa_mode") {
        config.pa_mode = pa_mode_from_string(value.get<std::string>());
      } else if (key == "multi_gt") {
        config.multi_gt = multi_gt_from_string(value.get<std::string>());
      } else if (key == "direction_ahead_deg") {
        config.direction_ahead_deg = value.get<double>();
      } else if (key == "direction_side_deg") {
        config.direction_side_deg = value.get<double>();
      } else if (key == "detection_threshold") {
        config.detection_threshold = value.get<double>();
      } else if (key == "resample_points") {
        config.resample_points = value.get<std::size_t>();
      } else if (key == "correlation") {
        config.correlation = correlation_kind_from_string(value.get<std::string>());
      } else if (key == "jobs") {
        config.jobs = value.get<std::size_t>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      }
    } catch (const nlohmann::json::exception & e) {
      throw ConfigError(name + ": key '" + key + "': " + e.what());
    }
  }
  return config;
}

RunConfig load_run_config(const std::string & path, const RunConfig & base)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ": cannot open");
  }
  return parse_run_config(in, path, base);
}

void validate_config(const RunConfig & config)
{
  const auto fail = [](const std::string & message) { throw ConfigError(message); };
  const auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };

  if (!in_unit(config.alpha)) {
    fail("alpha must lie in [0,1]");
  }
  if (!std::isfinite(config.beta_ex) || config.beta_ex < 0.0) {
    fail("beta_ex must be non-negative");
  }
  if (!in_unit(config.min_label_score)) {
    fail("min_label_score must lie in [0,1]");
  }
  if (!is_valid(config.neutral_vad)) {
    fail("neutral_vad must lie in [0,1]^3");
  }
  if (!std::isfinite(config.dpo_beta) || config.dpo_beta <= 0.0) {
    fail("dpo_beta must be positive");
  }
  if (config.pa_gates.empty()) {
    fail("pa_gates must list at least one gate");
  }
  for (const double g : config.pa_gates) {
    if (!std::isfinite(g) || g <= 0.0) {
      fail("pa_gates entries must be positive");
    }
  }
  if (!(config.direction_ahead_deg > 0.0) || !(config.direction_ahead_deg < config.direction_side_deg) ||
      !(config.direction_side_deg <= 180.0)) {
    fail("direction boundaries need 0 < ahead < side <= 180 degrees");
  }
  if (!in_unit(config.detection_threshold)) {
    fail("detection_threshold must lie in [0,1]");
  }
  if (config.resample_points == 1) {
    fail("resample_points must be 0 (off) or at least 2");
  }
  if (config.jobs < 1) {
    fail("jobs must be at least 1");
  }
}

std::string config_provenance(const RunConfig & config)
{
  nlohmann::ordered_json j;
  j["alpha"] = config.alpha;
  j["beta_ex"] = config.beta_ex;
  j["min_label_score"] = config.min_label_score;
  j["neutral_vad"] = nlohmann::json::array(
    {config.neutral_vad.valence, config.neutral_vad.arousal, config.neutral_vad.dominance});
  j["dpo_beta"] = config.dpo_beta;
  j["pa_gates"] = config.pa_gates;
  j["pa_mode"] = to_string(config.pa_mode);
  j["multi_gt"] = to_string(config.multi_gt);
  j["direction_ahead_deg"] = config.direction_ahead_deg;
  j["direction_side_deg"] = config.direction_side_deg;
  j["detection_threshold"] = config.detection_threshold;
  j["resample_points"] = config.resample_points;
  j["correlation"] = to_string(config.correlation);
  j["seed"] = config.seed;
  return j.dump();
}

}  // namespace emotraj
