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

#ifndef EMOTRAJ_CONFIG_HPP_
#define EMOTRAJ_CONFIG_HPP_

#include "emotraj/emotion.hpp"
#include "emotraj/preference.hpp"
#include "emotraj/spatial_labels.hpp"
#include "emotraj/stats.hpp"
#include "emotraj/traj_metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace emotraj
{

std::string to_string(PaMode mode);
PaMode pa_mode_from_string(const std::string & name);
std::string to_string(MultiGtAggregation agg);
MultiGtAggregation multi_gt_from_string(const std::string & name);

/// Every tunable of the toolkit with its built-in default. Precedence is
/// CLI flag > config file > default.
struct RunConfig
{
  double alpha{0.5};
  double beta_ex{0.05};
  double min_label_score{0.0};
  VadVector neutral_vad{kNeutralVad};
  double dpo_beta{0.1};
  std::vector<double> pa_gates{2.0, 4.0};
  PaMode pa_mode{PaMode::kFinalPoint};
  MultiGtAggregation multi_gt{MultiGtAggregation::kMin};
  double direction_ahead_deg{15.0};
  double direction_side_deg{60.0};
  double detection_threshold{0.3};
  std::size_t resample_points{0};  // 0 disables resampling
  CorrelationKind correlation{CorrelationKind::kSpearman};
  std::size_t jobs{1};
  std::uint64_t seed{0};  // reserved for future stochastic features

  LabelConfig label_config() const;
  DpoConfig dpo_config() const;
  DirectionBoundaries direction_boundaries() const;
};

/// Parses a JSON object of config keys. Unknown keys are rejected so
/// typos fail loudly. Missing keys keep the given base value.
RunConfig parse_run_config(
  std::istream & in, const std::string & name = "<config>", const RunConfig & base = {});
RunConfig load_run_config(const std::string & path, const RunConfig & base = {});

/// Throws ConfigError on the first field outside its operating range.
void validate_config(const RunConfig & config);

/// Canonical one-line JSON of the effective config, echoed into output
/// headers. Excludes `jobs`: parallelism must never change output bytes.
std::string config_provenance(const RunConfig & config);

}  // namespace emotraj

#endif  // EMOTRAJ_CONFIG_HPP_
