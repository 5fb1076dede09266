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

#ifndef EMOTRAJ_SPATIAL_LABELS_HPP_
#define EMOTRAJ_SPATIAL_LABELS_HPP_

#include "emotraj/geometry.hpp"
#include "emotraj/traj_metrics.hpp"

#include <numbers>
#include <string>
#include <vector>

namespace emotraj
{

/// One detector output in the ego ground plane (meters, +X forward).
struct Detection3D
{
  std::string class_name;
  Waypoint centroid;
  double confidence{0.0};
};

/// Five-way discretization of the target bearing.
enum class DirectionClass { kDirectlyAhead, kFrontLeft, kFrontRight, kLeft, kRight };

/// Lowercase token for serialized records ("directly_ahead", "front_left", ...).
std::string to_string(DirectionClass c);

/// Pixel-space box together with the dimensions of its image.
struct RawBBox
{
  double x_min{0.0};
  double y_min{0.0};
  double x_max{0.0};
  double y_max{0.0};
  double image_width{0.0};
  double image_height{0.0};
};

/// Divides each coordinate by the matching image dimension, yielding a
/// box in [0,1]^2. Throws InvalidDimensions on non-positive dimensions
/// and InvalidBox when the pixel box is unordered or out of the image.
BBox normalize_bbox(const RawBBox & raw);

/// Inverse of normalize_bbox for the given image dimensions.
RawBBox denormalize_bbox(const BBox & box, double image_width, double image_height);

struct FilterResult
{
  std::vector<Detection3D> kept;
  /// True when duplicate-class detections survived the confidence cut and
  /// were therefore removed.
  bool ambiguous{false};
};

/// Keeps detections with confidence strictly above the threshold, then
/// drops every detection whose class occurs more than once among the
/// survivors. Input order is preserved.
FilterResult filter_detections(const std::vector<Detection3D> & dets, double threshold);

/// Bearing sector boundaries, radians from the +X axis.
struct DirectionBoundaries
{
  double ahead{15.0 * std::numbers::pi / 180.0};
  double side{60.0 * std::numbers::pi / 180.0};
};

/// Throws ConfigError unless 0 < ahead < side <= pi.
void validate_boundaries(const DirectionBoundaries & b);

/// Classifies theta = atan2(y, x):
///   |theta| <= ahead            -> DirectlyAhead
///   ahead < theta <= side       -> FrontLeft
///   -side <= theta < -ahead     -> FrontRight
///   theta > side                -> Left
///   theta < -side               -> Right
/// Throws ZeroCentroid at the origin.
DirectionClass direction_class(const Waypoint & centroid, const DirectionBoundaries & b = {});

/// Euclidean distance between the ego centroid and the target centroid.
/// With ego at the origin this is the target's norm.
double depth_target(const Waypoint & ego_centroid, const Waypoint & target_centroid);

}  // namespace emotraj

#endif  // EMOTRAJ_SPATIAL_LABELS_HPP_
