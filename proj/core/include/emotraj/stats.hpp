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

#ifndef EMOTRAJ_STATS_HPP_
#define EMOTRAJ_STATS_HPP_

#include "emotraj/traj_features.hpp"

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace emotraj
{

enum class CorrelationKind { kSpearman, kPearson, kKendall };

std::string to_string(CorrelationKind kind);

/// Parses "spearman", "pearson", or "kendall". Throws ConfigError.
CorrelationKind correlation_kind_from_string(const std::string & name);

/// 1-based ranks with ties receiving the average of the ranks they span.
std::vector<double> average_ranks(const std::vector<double> & xs);

/// Pearson product-moment correlation. Throws LengthMismatch on unequal
/// lengths, DegenerateInput when n < 2 or a column is constant,
/// NonFiniteInput on NaN/inf values.
double pearson(const std::vector<double> & xs, const std::vector<double> & ys);

/// Pearson correlation of the average-ranked data. Errors as pearson.
double spearman(const std::vector<double> & xs, const std::vector<double> & ys);

/// Kendall tau-b: (concordant - discordant) / sqrt((n0 - n1)(n0 - n2))
/// where n1, n2 count pairs tied within each column. Errors as pearson.
double kendall(const std::vector<double> & xs, const std::vector<double> & ys);

double correlate(
  const std::vector<double> & xs, const std::vector<double> & ys, CorrelationKind kind);

/// 100 * (err_baseline - err_improved) / err_baseline.
/// Throws ZeroBaseline unless err_baseline > 0.
double error_reduction(double err_baseline, double err_improved);

/// 100 * (value_new - value_old) / value_old, with the baseline's signed
/// value as denominator. Throws ZeroBaseline when value_old is 0.
double improvement_percent(double value_old, double value_new);

/// Per-record geometric features, column-per-feature, indexed like
/// kFeatureNames. Missing entries mark degenerate trajectories and are
/// dropped pairwise before correlating.
struct FeatureTable
{
  std::vector<std::string> ids;
  std::array<std::vector<std::optional<double>>, kFeatureNames.size()> columns;

  void add_row(const std::string & id, const FeatureVector & features);
  std::size_t size() const { return ids.size(); }
};

/// Reads back a feature CSV: `id` column plus one column per entry of
/// kFeatureNames, empty cells marking degenerate values. Leading lines
/// starting with '#' are skipped.
FeatureTable parse_feature_table_csv(std::istream & in, const std::string & name = "<features>");
FeatureTable load_feature_table_csv(const std::string & path);

/// Rank correlation of one VAD axis against each feature column, for a
/// model feature table and the ground-truth table, plus the absolute gap.
struct AlignmentReportA
{
  std::array<double, kFeatureNames.size()> gt_corr{};
  std::array<double, kFeatureNames.size()> model_corr{};
  std::array<double, kFeatureNames.size()> abs_error{};
};

/// Throws IdMismatch when the two tables disagree on ids, LengthMismatch
/// when the arousal column does not align with them.
AlignmentReportA arousal_alignment(
  const std::vector<double> & arousal, const FeatureTable & model, const FeatureTable & gt,
  CorrelationKind kind = CorrelationKind::kSpearman);

/// Correlation between each model feature column and its ground-truth
/// counterpart, row-matched by id.
struct AlignmentReportB
{
  std::array<double, kFeatureNames.size()> corr{};
};

AlignmentReportB physical_alignment(
  const FeatureTable & model, const FeatureTable & gt,
  CorrelationKind kind = CorrelationKind::kSpearman);

/// Alignment-error panel assembled from per-feature correlations of a
/// baseline model and an improved model against the ground truth.
struct PanelA
{
  std::array<double, kFeatureNames.size()> gt_corr{};
  std::array<double, kFeatureNames.size()> baseline_corr{};
  std::array<double, kFeatureNames.size()> improved_corr{};
  std::array<double, kFeatureNames.size()> baseline_abs_error{};
  std::array<double, kFeatureNames.size()> improved_abs_error{};
  std::array<double, kFeatureNames.size()> error_reduction_pct{};
};

PanelA panel_a_from_correlations(
  const std::array<double, kFeatureNames.size()> & gt_corr,
  const std::array<double, kFeatureNames.size()> & baseline_corr,
  const std::array<double, kFeatureNames.size()> & improved_corr);

/// Physical-alignment panel: per-feature correlation to ground truth for
/// two models and the signed percent improvement.
struct PanelB
{
  std::array<double, kFeatureNames.size()> baseline_corr{};
  std::array<double, kFeatureNames.size()> improved_corr{};
  std::array<double, kFeatureNames.size()> improvement_pct{};
};

PanelB panel_b_from_correlations(
  const std::array<double, kFeatureNames.size()> & baseline_corr,
  const std::array<double, kFeatureNames.size()> & improved_corr);

}  // namespace emotraj

#endif  // EMOTRAJ_STATS_HPP_
