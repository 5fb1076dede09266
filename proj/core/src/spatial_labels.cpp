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

#include "emotraj/spatial_labels.hpp"

#include "emotraj/errors.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace emotraj
{

std::string to_string(DirectionClass c)
{
  switch (c) {
    case DirectionClass::kDirectlyAhead:
      return "directly_ahead";
    case DirectionClass::kFrontLeft:
      return "front_left";
    case DirectionClass::kFrontRight:
      return "front_right";
    case DirectionClass::kLeft:
      return "left";
    case DirectionClass::kRight:
      return "right";
  }
  throw Error("unreachable direction class");
}

BBox normalize_bbox(const RawBBox & raw)
{
  if (!(raw.image_width > 0.0) || !(raw.image_height > 0.0)) {
    std::ostringstream os;
    os << "image dimensions must be positive, got " << raw.image_width << "x" << raw.image_height;
    throw InvalidDimensions(os.str());
  }
  const bool ordered = raw.x_min <= raw.x_max && raw.y_min <= raw.y_max;
  const bool inside = raw.x_min >= 0.0 && raw.x_max <= raw.image_width && raw.y_min >= 0.0 &&
                      raw.y_max <= raw.image_height;
  if (!ordered || !inside) {
    std::ostringstream os;
    os << "pixel box (" << raw.x_min << "," << raw.y_min << "," << raw.x_max << "," << raw.y_max
       << ") invalid for a " << raw.image_width << "x" << raw.image_height << " image";
    throw InvalidBox(os.str());
  }
  BBox out;
  out.x_min = raw.x_min / raw.image_width;
  out.x_max = raw.x_max / raw.image_width;
  out.y_min = raw.y_min / raw.image_height;
  out.y_max = raw.y_max / raw.image_height;
  return out;
}

RawBBox denormalize_bbox(const BBox & box, double image_width, double image_height)
{
  if (!(image_width > 0.0) || !(image_height > 0.0)) {
    std::ostringstream os;
    os << "image dimensions must be positive, got " << image_width << "x" << image_height;
    throw InvalidDimensions(os.str());
  }
  validate_bbox(box);
  RawBBox out;
  out.x_min = box.x_min * image_width;
  out.x_max = box.x_max * image_width;
  out.y_min = box.y_min * image_height;
  out.y_max = box.y_max * image_height;
  out.image_width = image_width;
  out.image_height = image_height;
  return out;
}

FilterResult filter_detections(const std::vector<Detection3D> & dets, double threshold)
{
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    std::ostringstream os;
    os << "confidence threshold " << threshold << " outside [0,1]";
    throw ConfigError(os.str());
  }
  std::vector<Detection3D> confident;
  for (const auto & det : dets) {
    if (det.confidence > threshold) {
      confident.push_back(det);
    }
  }
  std::map<std::string, std::size_t> class_count;
  for (const auto & det : confident) {
    ++class_count[det.class_name];
  }
  FilterResult result;
  for (auto & det : confident) {
    if (class_count[det.class_name] > 1) {
      result.ambiguous = true;
    } else {
      result.kept.push_back(std::move(det));
    }
  }
  return result;
}

void validate_boundaries(const DirectionBoundaries & b)
{
  if (!(b.ahead > 0.0) || !(b.ahead < b.side) || !(b.side <= std::numbers::pi)) {
    std::ostringstream os;
    os << "direction boundaries need 0 < ahead < side <= pi, got ahead=" << b.ahead
       << " side=" << b.side;
    throw ConfigError(os.str());
  }
}

DirectionClass direction_class(const Waypoint & centroid, const DirectionBoundaries & b)
{
  validate_boundaries(b);
  if (!is_finite(centroid)) {
    throw NonFiniteInput("centroid coordinates must be finite");
  }
  if (centroid.x == 0.0 && centroid.y == 0.0) {
    throw ZeroCentroid("bearing is undefined at the ego origin");
  }
  // wrap_angle maps the signed-zero artifact atan2(-0, x<0) = -pi onto +pi
  // so a target directly behind classifies identically for y = +-0.
  const double theta = wrap_angle(std::atan2(centroid.y, centroid.x));
  if (std::abs(theta) <= b.ahead) {
    return DirectionClass::kDirectlyAhead;
  }
  if (theta > b.ahead && theta <= b.side) {
    return DirectionClass::kFrontLeft;
  }
  if (theta < -b.ahead && theta >= -b.side) {
    return DirectionClass::kFrontRight;
  }
  if (theta > b.side) {
    return DirectionClass::kLeft;
  }
  return DirectionClass::kRight;
}

double depth_target(const Waypoint & ego_centroid, const Waypoint & target_centroid)
{
  if (!is_finite(ego_centroid) || !is_finite(target_centroid)) {
    throw NonFiniteInput("centroid coordinates must be finite");
  }
  return distance(ego_centroid, target_centroid);
}

}  // namespace emotraj
