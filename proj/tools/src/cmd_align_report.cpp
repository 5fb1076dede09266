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
#include <emotraj/stats.hpp>

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

namespace emotraj::tools
{

namespace
{

constexpr std::size_t kF = kFeatureNames.size();
using Row = std::array<double, kF>;

struct ArousalColumn
{
  std::vector<std::string> ids;
  std::vector<double> arousal;
};

// Reads the vad-label output (JSONL of {"id", "vad": [v,a,d], ...}) and
// keeps the arousal component.
ArousalColumn load_arousal(const std::string & path)
{
  const JsonlFile file = load_jsonl(path);
  if (!file.issues.empty()) {
    std::ostringstream os;
    os << path << ":" << file.issues.front().line << ": " << file.issues.front().message;
    throw ParseError(os.str());
  }
  ArousalColumn column;
  for (const auto & record : data_records(file)) {
    const nlohmann::json id = require_id(record.value);
    if (!record.value.contains("vad") || !record.value["vad"].is_array() ||
        record.value["vad"].size() != 3 || !record.value["vad"][1].is_number()) {
      std::ostringstream os;
      os << path << ":" << record.line << ": record needs 'vad' as [v,a,d]";
      throw ParseError(os.str());
    }
    column.ids.push_back(id.is_string() ? id.get<std::string>() : id.dump());
    column.arousal.push_back(record.value["vad"][1].get<double>());
  }
  return column;
}

Row row_from_json(const nlohmann::json & j, const std::string & where)
{
  if (!j.is_array() || j.size() != kF) {
    throw ParseError(where + " must list one value per feature (" + std::to_string(kF) + ")");
  }
  Row row{};
  for (std::size_t f = 0; f < kF; ++f) {
    if (!j[f].is_number()) {
      throw ParseError(where + " must contain numbers");
    }
    row[f] = j[f].get<double>();
  }
  return row;
}

std::string render_cells(const std::string & label, const std::array<std::string, kF> & cells)
{
  std::ostringstream os;
  os << "  " << label;
  for (std::size_t pad = label.size(); pad < 22; ++pad) {
    os << ' ';
  }
  for (const auto & cell : cells) {
    for (std::size_t pad = cell.size(); pad < 15; ++pad) {
      os << ' ';
    }
    os << cell;
  }
  os << '\n';
  return os.str();
}

std::string render_header()
{
  std::array<std::string, kF> cells;
  for (std::size_t f = 0; f < kF; ++f) {
    cells[f] = std::string(kFeatureNames[f]);
  }
  return render_cells("", cells);
}

std::array<std::string, kF> format_row(const Row & row, int digits, bool explicit_sign)
{
  std::array<std::string, kF> cells;
  for (std::size_t f = 0; f < kF; ++f) {
    cells[f] = fixed(row[f], digits);
    if (explicit_sign && row[f] >= 0.0) {
      cells[f] = "+" + cells[f];
    }
  }
  return cells;
}

void append_csv_row(std::string & csv, const char * panel, const char * label, const Row & row)
{
  csv += panel;
  csv += ',';
  csv += label;
  for (std::size_t f = 0; f < kF; ++f) {
    csv += ',' + format_double(row[f]);
  }
  csv += '\n';
}

}  // namespace

int run_align_report(const GlobalOptions & global, const AlignReportOptions & opt)
{
  RunConfig config = base_config(global);
  if (opt.correlation) {
    config.correlation = correlation_kind_from_string(*opt.correlation);
  }
  validate_config(config);

  const bool inject_mode = !opt.inject.empty();
  if (!inject_mode && (opt.features.empty() || opt.gt_features.empty() || opt.vad.empty())) {
    throw ConfigError("give --features, --gt-features and --vad, or --inject");
  }

  std::optional<PanelA> panel_a;
  std::optional<PanelB> panel_b;
  std::optional<AlignmentReportA> single_a;
  std::optional<AlignmentReportB> single_b;

  if (inject_mode) {
    std::ifstream in(opt.inject);
    if (!in) {
      throw ParseError(opt.inject + ": cannot open");
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception & e) {
      throw ParseError(opt.inject + ": " + e.what());
    }
    if (doc.contains("panel_a")) {
      const auto & a = doc["panel_a"];
      panel_a = panel_a_from_correlations(
        row_from_json(a.value("gt", nlohmann::json()), "panel_a.gt"),
        row_from_json(a.value("baseline", nlohmann::json()), "panel_a.baseline"),
        row_from_json(a.value("improved", nlohmann::json()), "panel_a.improved"));
    }
    if (doc.contains("panel_b")) {
      const auto & b = doc["panel_b"];
      panel_b = panel_b_from_correlations(
        row_from_json(b.value("baseline", nlohmann::json()), "panel_b.baseline"),
        row_from_json(b.value("improved", nlohmann::json()), "panel_b.improved"));
    }
    if (!panel_a && !panel_b) {
      throw ParseError(opt.inject + ": needs 'panel_a' and/or 'panel_b'");
    }
  } else {
    const FeatureTable model = load_feature_table_csv(opt.features);
    const FeatureTable gt = load_feature_table_csv(opt.gt_features);
    const ArousalColumn vad = load_arousal(opt.vad);
    if (vad.ids != model.ids) {
      throw IdMismatch("--vad ids do not match --features ids (same order required)");
    }

    const AlignmentReportA improved_a =
      arousal_alignment(vad.arousal, model, gt, config.correlation);
    const AlignmentReportB improved_b = physical_alignment(model, gt, config.correlation);

    if (!opt.baseline_features.empty()) {
      const FeatureTable baseline = load_feature_table_csv(opt.baseline_features);
      const AlignmentReportA baseline_a =
        arousal_alignment(vad.arousal, baseline, gt, config.correlation);
      const AlignmentReportB baseline_b = physical_alignment(baseline, gt, config.correlation);
      panel_a =
        panel_a_from_correlations(improved_a.gt_corr, baseline_a.model_corr, improved_a.model_corr);
      panel_b = panel_b_from_correlations(baseline_b.corr, improved_b.corr);
    } else {
      single_a = improved_a;
      single_b = improved_b;
    }
  }

  std::string text = "Emotion-Action Alignment Report\n";
  text += "correlation: " + to_string(config.correlation) + "\n\n";
  std::string csv = csv_comment("align-report", config);
  csv += "panel,row";
  for (const auto name : kFeatureNames) {
    csv += ',';
    csv += name;
  }
  csv += '\n';

  text += "Panel A: Arousal Alignment Error\n";
  text += render_header();
  if (panel_a) {
    text += render_cells("gt corr", format_row(panel_a->gt_corr, 3, false));
    text += render_cells("baseline corr", format_row(panel_a->baseline_corr, 3, false));
    text += render_cells("baseline |error|", format_row(panel_a->baseline_abs_error, 3, false));
    text += render_cells("improved corr", format_row(panel_a->improved_corr, 3, false));
    text += render_cells("improved |error|", format_row(panel_a->improved_abs_error, 3, false));
    text += render_cells("error reduction (%)", format_row(panel_a->error_reduction_pct, 1, false));
    append_csv_row(csv, "A", "gt_corr", panel_a->gt_corr);
    append_csv_row(csv, "A", "baseline_corr", panel_a->baseline_corr);
    append_csv_row(csv, "A", "baseline_abs_error", panel_a->baseline_abs_error);
    append_csv_row(csv, "A", "improved_corr", panel_a->improved_corr);
    append_csv_row(csv, "A", "improved_abs_error", panel_a->improved_abs_error);
    append_csv_row(csv, "A", "error_reduction_pct", panel_a->error_reduction_pct);
  } else if (single_a) {
    text += render_cells("gt corr", format_row(single_a->gt_corr, 3, false));
    text += render_cells("model corr", format_row(single_a->model_corr, 3, false));
    text += render_cells("|error|", format_row(single_a->abs_error, 3, false));
    append_csv_row(csv, "A", "gt_corr", single_a->gt_corr);
    append_csv_row(csv, "A", "model_corr", single_a->model_corr);
    append_csv_row(csv, "A", "abs_error", single_a->abs_error);
  } else {
    text += "  (not requested)\n";
  }
  text += '\n';

  text += "Panel B: Physical Alignment Quality\n";
  text += render_header();
  if (panel_b) {
    text += render_cells("baseline corr", format_row(panel_b->baseline_corr, 3, false));
    text += render_cells("improved corr", format_row(panel_b->improved_corr, 3, false));
    text += render_cells("improvement (%)", format_row(panel_b->improvement_pct, 1, true));
    append_csv_row(csv, "B", "baseline_corr", panel_b->baseline_corr);
    append_csv_row(csv, "B", "improved_corr", panel_b->improved_corr);
    append_csv_row(csv, "B", "improvement_pct", panel_b->improvement_pct);
  } else if (single_b) {
    text += render_cells("model corr", format_row(single_b->corr, 3, false));
    append_csv_row(csv, "B", "model_corr", single_b->corr);
  } else {
    text += "  (not requested)\n";
  }

  emit_output(global, text);
  if (!opt.csv_path.empty()) {
    write_text_atomic(opt.csv_path, csv);
  }
  return 0;
}

}  // namespace emotraj::tools
