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

#ifndef EMOTRAJ_TOOLS_COMMANDS_HPP_
#define EMOTRAJ_TOOLS_COMMANDS_HPP_

#include "common.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace emotraj::tools
{

struct VadLabelOptions
{
  std::string input;
  std::string lexicon;
  std::string label_map;
  std::string stopwords;
  std::string idf_corpus;
  std::optional<double> alpha;
  std::optional<double> beta_ex;
  std::optional<double> min_label_score;
};
int run_vad_label(const GlobalOptions & global, const VadLabelOptions & opt);

struct TrajEvalOptions
{
  std::string input;
  std::string pred;
  std::string gt;
  std::vector<double> pa_gates;
  std::optional<std::string> pa_mode;
  std::optional<std::string> multi_gt;
  std::optional<std::size_t> resample_points;
};
int run_traj_eval(const GlobalOptions & global, const TrajEvalOptions & opt);

struct TrajFeaturesOptions
{
  std::string input;
};
int run_traj_features(const GlobalOptions & global, const TrajFeaturesOptions & opt);

struct BuildPairsOptions
{
  std::string input;
};
int run_build_pairs(const GlobalOptions & global, const BuildPairsOptions & opt);

struct DpoScoreOptions
{
  std::string input;
  std::optional<double> dpo_beta;
};
int run_dpo_score(const GlobalOptions & global, const DpoScoreOptions & opt);

struct SpatialLabelsOptions
{
  std::string input;
  std::optional<double> detection_threshold;
  std::optional<double> ahead_deg;
  std::optional<double> side_deg;
};
int run_spatial_labels(const GlobalOptions & global, const SpatialLabelsOptions & opt);

struct AlignReportOptions
{
  std::string features;
  std::string gt_features;
  std::string baseline_features;
  std::string vad;
  std::string inject;
  std::string csv_path;
  std::optional<std::string> correlation;
};
int run_align_report(const GlobalOptions & global, const AlignReportOptions & opt);

}  // namespace emotraj::tools

#endif  // EMOTRAJ_TOOLS_COMMANDS_HPP_
