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
#include <emotraj/spatial_labels.hpp>

#include <algorithm>
#include <utility>

namespace emotraj::tools
{

namespace
{

struct SpatialInput
{
  std::size_t line{0};
  nlohmann::json id;
  std::vector<Detection3D> detections;
  RawBBox bbox;
  std::string target_class;  // empty = highest-confidence survivor
};

double number_field(const nlohmann::json & j, const char * key, const std::string & where)
{
  if (!j.contains(key) || !j[key].is_number()) {
    throw ParseError(where + " needs a numeric '" + key + "'");
  }
  return j[key].get<double>();
}

SpatialInput parse_record(const JsonlRecord & record)
{
  SpatialInput input;
  input.line = record.line;
  input.id = require_id(record.value);
  const auto & value = record.value;

  if (!value.contains("detections") || !value["detections"].is_array()) {
    throw ParseError("record needs a 'detections' array");
  }
  for (const auto & d : value["detections"]) {
    if (!d.is_object() || !d.contains("class") || !d["class"].is_string() ||
        !d.contains("centroid") || !d["centroid"].is_array() || d["centroid"].size() != 2 ||
        !d["centroid"][0].is_number() || !d["centroid"][1].is_number()) {
      throw ParseError("each detection needs 'class', 'centroid' [x,y], and 'confidence'");
    }
    Detection3D det;
    det.class_name = d["class"].get<std::string>();
    det.centroid = {d["centroid"][0].get<double>(), d["centroid"][1].get<double>()};
    det.confidence = number_field(d, "confidence", "detection");
    if (!(det.confidence >= 0.0 && det.confidence <= 1.0)) {
      throw ParseError("detection confidence outside [0,1]");
    }
    if (!is_finite(det.centroid)) {
      throw ParseError("detection centroid must be finite");
    }
    input.detections.push_back(std::move(det));
  }

  if (!value.contains("bbox") || !value["bbox"].is_object()) {
    throw ParseError("record needs a 'bbox' object");
  }
  if (!value.contains("image") || !value["image"].is_object()) {
    throw ParseError("record needs an 'image' object");
  }
  const auto & bbox = value["bbox"];
  const auto & image = value["image"];
  input.bbox.x_min = number_field(bbox, "x_min", "bbox");
  input.bbox.y_min = number_field(bbox, "y_min", "bbox");
  input.bbox.x_max = number_field(bbox, "x_max", "bbox");
  input.bbox.y_max = number_field(bbox, "y_max", "bbox");
  input.bbox.image_width = number_field(image, "w", "image");
  input.bbox.image_height = number_field(image, "h", "image");

  if (value.contains("target_class")) {
    if (!value["target_class"].is_string()) {
      throw ParseError("'target_class' must be a string");
    }
    input.target_class = value["target_class"].get<std::string>();
  }
  return input;
}

}  // namespace

int run_spatial_labels(const GlobalOptions & global, const SpatialLabelsOptions & opt)
{
  RunConfig config = base_config(global);
  if (opt.detection_threshold) {
    config.detection_threshold = *opt.detection_threshold;
  }
  if (opt.ahead_deg) {
    config.direction_ahead_deg = *opt.ahead_deg;
  }
  if (opt.side_deg) {
    config.direction_side_deg = *opt.side_deg;
  }
  validate_config(config);

  JsonlFile file = load_jsonl(opt.input);
  std::vector<JsonlIssue> issues = std::move(file.issues);
  std::vector<SpatialInput> inputs;
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
  const DirectionBoundaries boundaries = config.direction_boundaries();
  const auto outcomes = parallel_map(inputs, config.jobs, [&](const SpatialInput & input) {
    Outcome outcome;
    try {
      const BBox norm = normalize_bbox(input.bbox);
      const FilterResult filtered = filter_detections(input.detections, config.detection_threshold);

      // Target selection: the requested class if given, otherwise the
      // most confident surviving detection (first wins on ties).
      const Detection3D * target = nullptr;
      if (!input.target_class.empty()) {
        for (const auto & det : filtered.kept) {
          if (det.class_name == input.target_class) {
            target = &det;
            break;
          }
        }
        if (target == nullptr) {
          throw UnknownLabel(
            "target class '" + input.target_class + "' not among surviving detections");
        }
      } else {
        for (const auto & det : filtered.kept) {
          if (target == nullptr || det.confidence > target->confidence) {
            target = &det;
          }
        }
      }

      nlohmann::ordered_json out;
      out["id"] = input.id;
      out["bbox_norm"] = nlohmann::json::array({norm.x_min, norm.y_min, norm.x_max, norm.y_max});
      if (target != nullptr) {
        out["direction"] = to_string(direction_class(target->centroid, boundaries));
        out["depth"] = depth_target({0.0, 0.0}, target->centroid);
      } else {
        out["direction"] = nullptr;
        out["depth"] = nullptr;
      }
      out["ambiguous"] = filtered.ambiguous;
      outcome.text = out.dump() + "\n";
      outcome.ok = true;
    } catch (const std::exception & e) {
      outcome.error = e.what();
    }
    return outcome;
  });

  std::string content = meta_line("spatial-labels", config);
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
  return report_issues("spatial-labels", opt.input, processed, issues);
}

}  // namespace emotraj::tools
