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

#ifndef EMOTRAJ_GEOMETRY_HPP_
#define EMOTRAJ_GEOMETRY_HPP_

#include <cstddef>
#include <vector>

namespace emotraj
{

/// 2D waypoint in the ego-centric metric frame: x forward [m], y lateral
/// (left-positive) [m].
struct Waypoint
{
  double x = 0.0;
  double y = 0.0;
};

bool operator==(const Waypoint & a, const Waypoint & b);
bool is_finite(const Waypoint & p);
double distance(const Waypoint & a, const Waypoint & b);

/// Ordered, temporally sorted sequence of waypoints. Operations require it
/// to be non-empty with finite coordinates.
struct Trajectory
{
  std::vector<Waypoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Waypoint & front() const { return points.front(); }
  const Waypoint & back() const { return points.back(); }
};

/// Throws DegenerateTrajectory on an empty sequence, NonFiniteInput on NaN
/// or infinite coordinates.
void validate_trajectory(const Trajectory & traj);

/// Pose of the ego vehicle in some source frame. heading is measured
/// counterclockwise from the source +X axis, in radians.
struct EgoPose
{
  Waypoint position;
  double heading = 0.0;
};

/// BEV raster geometry: pixel resolution and the pixel position of the ego
/// centroid. y_down selects image convention (pixel Y grows downward), in
/// which case the metric lateral axis is flipped so that left stays positive.
struct PixelFrame
{
  double resolution = 10.0;  // pixels per meter
  double origin_x = 0.0;
  double origin_y = 0.0;
  bool y_down = false;
};

/// Segments shorter than this are treated as zero-length and merged before
/// heading computation.
inline constexpr double kSegmentEpsilon = 1e-9;

/// Normalizes an angle to (-pi, pi].
double wrap_angle(double radians);

/// Expresses a source-frame point in the ego frame: translate by
/// -pose.position, then rotate by -pose.heading. The ego origin maps to
/// (0, 0); a point one meter ahead of the vehicle maps to (1, 0).
Waypoint global_to_ego(const Waypoint & point, const EgoPose & pose);

/// Inverse of global_to_ego.
Waypoint ego_to_global(const Waypoint & point, const EgoPose & pose);

/// Converts raw pixel coordinates to metric ego-frame coordinates:
/// (px - origin) / resolution, with the Y flip applied when y_down is set.
/// Throws NonFiniteInput on NaN/inf pixels, ConfigError on resolution <= 0.
Waypoint pixels_to_meters(double px, double py, const PixelFrame & frame);

/// Returns the waypoints with consecutive duplicates (segment length < eps)
/// merged away. Keeps the first point of every duplicate run.
std::vector<Waypoint> effective_points(const Trajectory & traj, double eps = kSegmentEpsilon);

/// Per-segment heading angles atan2(dy, dx) over the effective points.
/// Throws DegenerateTrajectory when fewer than two distinct points remain.
std::vector<double> headings(const Trajectory & traj);

/// Consecutive heading changes wrapped to (-pi, pi]. Throws
/// DegenerateTrajectory when fewer than three effective points remain.
std::vector<double> turn_angles(const Trajectory & traj);

/// Sum of consecutive segment lengths; 0 for a single point.
double path_length(const Trajectory & traj);

/// Minimum Euclidean distance from p to the closed segment [a, b]. A
/// degenerate segment (a == b) reduces to point distance.
double point_to_segment_distance(const Waypoint & p, const Waypoint & a, const Waypoint & b);

}  // namespace emotraj

#endif  // EMOTRAJ_GEOMETRY_HPP_
