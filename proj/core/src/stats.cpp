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

#include "emotraj/stats.hpp"

#include "emotraj/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace emotraj
{

namespace
{

void check_columns(const std::vector<double> & xs, const std::vector<double> & ys)
{
  if (xs.size() != ys.size()) {
    std::ostringstream os;
    os << "column lengths differ: " << xs.size() << " vs " << ys.size();
    throw LengthMismatch(os.str());
  }
  if (xs.size() < 2) {
    throw DegenerateInput("correlation needs at least two observations");
  }
  for (const auto * col : {&xs, &ys}) {
    for (const double v : *col) {
      if (!std::isfinite(v)) {
        throw NonFiniteInput("correlation input contains a non-finite value");
      }
    }
    const auto [mn, mx] = std::minmax_element(col->begin(), col->end());
    if (*mn == *mx) {
      throw DegenerateInput("correlation input column is constant");
    }
  }
}

double pearson_unchecked(const std::vector<double> & xs, const std::vector<double> & ys)
{
  const double n = static_cast<double>(xs.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double cov = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  return cov / std::sqrt(var_x * var_y);
}

void check_finite_scalar(double v, const char * what)
{
  if (!std::isfinite(v)) {
    throw NonFiniteInput(std::string(what) + " must be finite");
  }
}

}  // namespace

std::string to_string(CorrelationKind kind)
{
  switch (kind) {
    case CorrelationKind::kSpearman:
      return "spearman";
    case CorrelationKind::kPearson:
      return "pearson";
    case CorrelationKind::kKendall:
      return "kendall";
  }
  throw Error("unreachable correlation kind");
}

CorrelationKind correlation_kind_from_string(const std::string & name)
{
  if (name == "spearman") {
    return CorrelationKind::kSpearman;
  }
  if (name == "pearson") {
    return CorrelationKind::kPearson;
  }
  if (name == "kendall") {
    return CorrelationKind::kKendall;
  }
  throw ConfigError("unknown correlation kind '" + name + "'");
}

std::vector<double> average_ranks(const std::vector<double> & xs)
{
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&xs](std::size_t a, std::size_t b) {
    return xs[a] < xs[b];
  });
  std::vector<double> ranks(xs.size(), 0.0);
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) {
      ++j;
    }
    // Positions i..j (0-based) share the average of 1-based ranks i+1..j+1.
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = rank;
    }
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double> & xs, const std::vector<double> & ys)
{
  check_columns(xs, ys);
  return pearson_unchecked(xs, ys);
}

double spearman(const std::vector<double> & xs, const std::vector<double> & ys)
{
  check_columns(xs, ys);
  return pearson_unchecked(average_ranks(xs), average_ranks(ys));
}

double kendall(const std::vector<double> & xs, const std::vector<double> & ys)
{
  check_columns(xs, ys);
  const std::size_t n = xs.size();
  long long concordant = 0;
  long long discordant = 0;
  long long ties_x = 0;
  long long ties_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      if (dx == 0.0) {
        ++ties_x;
      }
      if (dy == 0.0) {
        ++ties_y;
      }
      if (dx != 0.0 && dy != 0.0) {
        if ((dx > 0.0) == (dy > 0.0)) {
          ++concordant;
        } else {
          ++discordant;
        }
      }
    }
  }
  const auto n0 = static_cast<long long>(n * (n - 1) / 2);
  const double denom = std::sqrt(
    static_cast<double>(n0 - ties_x) * static_cast<double>(n0 - ties_y));
  return static_cast<double>(concordant - discordant) / denom;
}

double correlate(
  const std::vector<double> & xs, const std::vector<double> & ys, CorrelationKind kind)
{
  switch (kind) {
    case CorrelationKind::kSpearman:
      return spearman(xs, ys);
    case CorrelationKind::kPearson:
      return pearson(xs, ys);
    case CorrelationKind::kKendall:
      return kendall(xs, ys);
  }
  throw Error("unreachable correlation kind");
}

double error_reduction(double err_baseline, double err_improved)
{
  check_finite_scalar(err_baseline, "baseline error");
  check_finite_scalar(err_improved, "improved error");
  if (!(err_baseline > 0.0)) {
    std::ostringstream os;
    os << "baseline error must be positive, got " << err_baseline;
    throw ZeroBaseline(os.str());
  }
  return 100.0 * (err_baseline - err_improved) / err_baseline;
}

double improvement_percent(double value_old, double value_new)
{
  check_finite_scalar(value_old, "baseline value");
  check_finite_scalar(value_new, "new value");
  if (value_old == 0.0) {
    throw ZeroBaseline("baseline value is zero");
  }
  return 100.0 * (value_new - value_old) / value_old;
}

void FeatureTable::add_row(const std::string & id, const FeatureVector & features)
{
  ids.push_back(id);
  for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
    columns[f].push_back(features.by_index(f));
  }
}

namespace
{

std::vector<std::string> split_comma(const std::string & line)
{
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

FeatureTable parse_feature_table_csv(std::istream & in, const std::string & name)
{
  std::string expected_header = "id";
  for (const auto feature : kFeatureNames) {
    expected_header += ',';
    expected_header += feature;
  }

  FeatureTable table;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    if (raw.empty() || raw[0] == '#') {
      continue;
    }
    if (!header_seen) {
      if (raw != expected_header) {
        std::ostringstream os;
        os << name << ":" << line_no << ": header must be '" << expected_header << "'";
        throw ParseError(os.str());
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_comma(raw);
    if (fields.size() != 1 + kFeatureNames.size()) {
      std::ostringstream os;
      os << name << ":" << line_no << ": expected " << (1 + kFeatureNames.size()) << " columns";
      throw ParseError(os.str());
    }
    table.ids.push_back(fields[0]);
    for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
      const std::string & cell = fields[f + 1];
      if (cell.empty()) {
        table.columns[f].push_back(std::nullopt);
        continue;
      }
      double value = 0.0;
      const auto result = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (result.ec != std::errc() || result.ptr != cell.data() + cell.size()) {
        std::ostringstream os;
        os << name << ":" << line_no << ": non-numeric cell '" << cell << "'";
        throw ParseError(os.str());
      }
      table.columns[f].push_back(value);
    }
  }
  if (!header_seen) {
    throw ParseError(name + ": missing feature CSV header");
  }
  return table;
}

FeatureTable load_feature_table_csv(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open");
  }
  return parse_feature_table_csv(in, path);
}

namespace
{

void check_same_ids(const FeatureTable & model, const FeatureTable & gt)
{
  if (model.size() != gt.size()) {
    std::ostringstream os;
    os << "feature tables have " << model.size() << " vs " << gt.size() << " rows";
    throw IdMismatch(os.str());
  }
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (model.ids[i] != gt.ids[i]) {
      std::ostringstream os;
      os << "feature tables disagree at row " << i << ": '" << model.ids[i] << "' vs '"
         << gt.ids[i] << "'";
      throw IdMismatch(os.str());
    }
  }
}

}  // namespace

AlignmentReportA arousal_alignment(
  const std::vector<double> & arousal, const FeatureTable & model, const FeatureTable & gt,
  CorrelationKind kind)
{
  check_same_ids(model, gt);
  if (arousal.size() != model.size()) {
    std::ostringstream os;
    os << "arousal column has " << arousal.size() << " rows, feature tables " << model.size();
    throw LengthMismatch(os.str());
  }
  AlignmentReportA report;
  for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
    const auto column_corr = [&](const FeatureTable & table) {
      std::vector<double> a;
      std::vector<double> v;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table.columns[f][i].has_value()) {
          a.push_back(arousal[i]);
          v.push_back(*table.columns[f][i]);
        }
      }
      return correlate(a, v, kind);
    };
    report.model_corr[f] = column_corr(model);
    report.gt_corr[f] = column_corr(gt);
    report.abs_error[f] = std::abs(report.model_corr[f] - report.gt_corr[f]);
  }
  return report;
}

AlignmentReportB physical_alignment(
  const FeatureTable & model, const FeatureTable & gt, CorrelationKind kind)
{
  check_same_ids(model, gt);
  AlignmentReportB report;
  for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < model.size(); ++i) {
      if (model.columns[f][i].has_value() && gt.columns[f][i].has_value()) {
        xs.push_back(*model.columns[f][i]);
        ys.push_back(*gt.columns[f][i]);
      }
    }
    report.corr[f] = correlate(xs, ys, kind);
  }
  return report;
}

PanelA panel_a_from_correlations(
  const std::array<double, kFeatureNames.size()> & gt_corr,
  const std::array<double, kFeatureNames.size()> & baseline_corr,
  const std::array<double, kFeatureNames.size()> & improved_corr)
{
  PanelA panel;
  panel.gt_corr = gt_corr;
  panel.baseline_corr = baseline_corr;
  panel.improved_corr = improved_corr;
  for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
    panel.baseline_abs_error[f] = std::abs(baseline_corr[f] - gt_corr[f]);
    panel.improved_abs_error[f] = std::abs(improved_corr[f] - gt_corr[f]);
    panel.error_reduction_pct[f] =
      error_reduction(panel.baseline_abs_error[f], panel.improved_abs_error[f]);
  }
  return panel;
}

PanelB panel_b_from_correlations(
  const std::array<double, kFeatureNames.size()> & baseline_corr,
  const std::array<double, kFeatureNames.size()> & improved_corr)
{
  PanelB panel;
  panel.baseline_corr = baseline_corr;
  panel.improved_corr = improved_corr;
  for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
    panel.improvement_pct[f] = improvement_percent(baseline_corr[f], improved_corr[f]);
  }
  return panel;
}

}  // namespace emotraj
