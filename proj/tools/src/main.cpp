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

#include <CLI11.hpp>

#include <iostream>
#include <memory>

#ifndef EMOTRAJ_VERSION
#define EMOTRAJ_VERSION "0.0.0"
#endif

namespace
{

using emotraj::tools::GlobalOptions;

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"emotraj: emotion-aware trajectory toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("emotraj ") + EMOTRAJ_VERSION);

  auto global = std::make_shared<GlobalOptions>();
  app.add_option("--config", global->config_path, "JSON config file (precedence: flag > file > default)")
    ->envname("EMOTRAJ_CONFIG");
  app.add_option("--jobs", global->jobs, "Worker threads; output bytes never depend on this");
  app.add_option("--output", global->output_path, "Output file (atomic write); default stdout");

  int exit_code = 0;

  {
    auto sub = app.add_subcommand("vad-label", "Continuous VAD labels for driving commands");
    sub->fallthrough();
    auto opt = std::make_shared<emotraj::tools::VadLabelOptions>();
    sub->add_option("input", opt->input, "JSONL of {id, command, scores}")->required();
    sub->add_option("--lexicon", opt->lexicon, "Word-VAD lexicon TSV")->required();
    sub->add_option("--label-map", opt->label_map, "Label-VAD map JSON")->required();
    sub->add_option("--stopwords", opt->stopwords, "Stop-word list, one per line");
    sub->add_option("--idf-corpus", opt->idf_corpus, "External idf corpus (one command per line)");
    sub->add_option("--alpha", opt->alpha, "Sentence/word fusion weight");
    sub->add_option("--beta-ex", opt->beta_ex, "Arousal boost per '!'");
    sub->add_option("--min-label-score", opt->min_label_score, "Ignore labels scoring below this");
    sub->callback([global, opt, &exit_code]() {
      exit_code = emotraj::tools::run_vad_label(*global, *opt);
    });
  }

  {
    auto sub = app.add_subcommand("traj-eval", "Similarity metrics between predictions and ground truth");
    sub->fallthrough();
    auto opt = std::make_shared<emotraj::tools::TrajEvalOptions>();
    sub->add_option("input", opt->input, "Combined JSONL of {id, pred, gts}");
    sub->add_option("--pred", opt->pred, "Prediction JSONL of {id, traj}");
    sub->add_option("--gt", opt->gt, "Ground-truth JSONL of {id, traj} or {id, trajs}");
    sub->add_option("--pa-gates", opt->pa_gates, "Gate radii in meters, e.g. 1,2,4")->delimiter(',');
    sub->add_option("--pa-mode", opt->pa_mode, "final_point or per_point_mean");
    sub->add_option("--multi-gt", opt->multi_gt, "min or mean over multiple ground truths");
    sub->add_option("--resample", opt->resample_points, "Arc-length resample to N points first");
    sub->callback([global, opt, &exit_code]() {
      exit_code = emotraj::tools::run_traj_eval(*global, *opt);
    });
  }

  {
    auto sub = app.add_subcommand("traj-features", "Geometric shape features per trajectory");
    sub->fallthrough();
    auto opt = std::make_shared<emotraj::tools::TrajFeaturesOptions>();
    sub->add_option("input", opt->input, "JSONL of {id, traj}")->required();
    sub->callback([global, opt, &exit_code]() {
      exit_code = emotraj::tools::run_traj_features(*global, *opt);
    });
  }

  {
    auto sub = app.add_subcommand("build-pairs", "Construct pseudo-preference pairs");
    sub->fallthrough();
    auto opt = std::make_shared<emotraj::tools::BuildPairsOptions>();
    sub->add_option("input", opt->input, "JSONL of {id, original, variants, gt_traj, rejected_trajs}")
      ->required();
    sub->callback([global, opt, &exit_code]() {
      exit_code = emotraj::tools::run_build_pairs(*global, *opt);
    });
  }

  {
    auto sub = app.add_subcommand("dpo-score", "Preference loss and reward margin per record");
    sub->fallthrough();
    auto opt = std::make_shared<emotraj::tools::DpoScoreOptions>();
    sub->add_option("input", opt->input, "JSONL of {id, logp_preferred, logp_rejected}")->required();
    sub->add_option("--dpo-beta", opt->dpo_beta, "Preference loss scale");
    sub->callback([global, opt, &exit_code]() {
      exit_code = emotraj::tools::run_dpo_score(*global, *opt);
    });
  }

  {
    auto sub = app.add_subcommand("spatial-labels", "Spatial supervision labels from detections");
    sub->fallthrough();
    auto opt = std::make_shared<emotraj::tools::SpatialLabelsOptions>();
    sub->add_option("input", opt->input, "JSONL of {id, detections, bbox, image}")->required();
    sub->add_option("--detection-threshold", opt->detection_threshold, "Keep confidence strictly above this");
    sub->add_option("--ahead-deg", opt->ahead_deg, "Directly-ahead half angle, degrees");
    sub->add_option("--side-deg", opt->side_deg, "Front/side boundary angle, degrees");
    sub->callback([global, opt, &exit_code]() {
      exit_code = emotraj::tools::run_spatial_labels(*global, *opt);
    });
  }

  {
    auto sub = app.add_subcommand("align-report", "Emotion-action alignment report panels");
    sub->fallthrough();
    auto opt = std::make_shared<emotraj::tools::AlignReportOptions>();
    sub->add_option("--features", opt->features, "Model feature CSV (traj-features output)");
    sub->add_option("--gt-features", opt->gt_features, "Ground-truth feature CSV");
    sub->add_option("--baseline-features", opt->baseline_features, "Baseline model feature CSV");
    sub->add_option("--vad", opt->vad, "VAD JSONL (vad-label output)");
    sub->add_option("--inject", opt->inject, "Skip feature files; panels from a correlations JSON");
    sub->add_option("--csv", opt->csv_path, "Also write the machine-readable CSV here");
    sub->add_option("--correlation", opt->correlation, "spearman, pearson, or kendall");
    sub->callback([global, opt, &exit_code]() {
      exit_code = emotraj::tools::run_align_report(*global, *opt);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    return app.exit(e);
  } catch (const emotraj::Error & e) {
    std::cerr << "emotraj: error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception & e) {
    std::cerr << "emotraj: unexpected error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
