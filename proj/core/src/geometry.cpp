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

#include "emotraj/geometry.hpp"

#include "emotraj/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace emotraj
{

bool operator==(const Waypoint & a, const Waypoint & b)
{
  return a.x == b.x && a.y == b.y;
}

bool is_finite(const Waypoint & p)
{
  return std::isfinite(p.x) && std::isfinite(p.y);
}

double distance(const Waypoint & a, const Waypoint & b)
{
  return std::hypot(a.x - b.x, a.y - b.y);
}

void validate_trajectory(const Trajectory & traj)
{
  if (traj.empty()) {
    throw DegenerateTrajectory("trajectory must contain at least one waypoint");
  }
  for (const auto & p : traj.points) {
    if (!is_finite(p)) {
      throw NonFiniteInput("trajectory contains a non-finite waypoint");
    }
  }
}

double wrap_angle(double radians)
{
  double wrapped = std::remainder(radians, 2.0 * std::numbers::pi);
  if (wrapped <= -std::numbers::pi) {
    wrapped += 2.0 * std::numbers::pi;
  }
  return wrapped;
}

Waypoint global_to_ego(const Waypoint & point, const EgoPose & pose)
{
  const double dx = point.x - pose.position.x;
  const double dy = point.y - pose.position.y;
  const double c = std::cos(pose.heading);
  const double s = std::sin(pose.heading);
  // rotation by -heading
  return {c * dx + s * dy, -s * dx + c * dy};
}

Waypoint ego_to_global(const Waypoint & point, const EgoPose & pose)
{
  const double c = std::cos(pose.heading);
  const double s = std::sin(pose.heading);
  return {
    c * point.x - s * point.y + pose.position.x,
    s * point.x + c * point.y + pose.position.y};
}

Waypoint pixels_to_meters(double px, double py, const PixelFrame & frame)
{
  if (!(frame.resolution > 0.0)) {
    throw ConfigError("pixel frame resolution must be positive");
  }
  if (!std::isfinite(px) || !std::isfinite(py)) {
    throw NonFiniteInput("pixel coordinates must be finite");
  }
  const double x = (px - frame.origin_x) / frame.resolution;
  double y = (py - frame.origin_y) / frame.resolution;
  if (frame.y_down) {
    y = -y;
  }
  return {x, y};
}

std::vector<Waypoint> effective_points(const Trajectory & traj, double eps)
{
  validate_trajectory(traj);
  std::vector<Waypoint> out;
  out.reserve(traj.size());
  out.push_back(traj.front());
  for (std::size_t i = 1; i < traj.size(); ++i) {
    if (distance(traj.points[i], out.back()) >= eps) {
      out.push_back(traj.points[i]);
    }
  }
  return out;
}

std::vector<double> headings(const Trajectory & traj)
{
  const auto pts = effective_points(traj);
  if (pts.size() < 2) {
    throw DegenerateTrajectory("heading computation needs at least two distinct waypoints");
  }
  std::vector<double> out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    out.push_back(std::atan2(pts[i + 1].y - pts[i].y, pts[i + 1].x - pts[i].x));
  }
  return out;
}

std::vector<double> turn_angles(const Trajectory & traj)
{
  const auto theta = headings(traj);
  if (theta.size() < 2) {
    throw DegenerateTrajectory("turn angles need at least three distinct waypoints");
  }
  std::vector<double> out;
  out.reserve(theta.size() - 1);
  for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
    out.push_back(wrap_angle(theta[i + 1] - theta[i]));
  }
  return out;
}

double path_length(const Trajectory & traj)
{
  validate_trajectory(traj);
  double total = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    total += distance(traj.points[i - 1], traj.points[i]);
  }
  return total;
}

double point_to_segment_distance(const Waypoint & p, const Waypoint & a, const Waypoint & b)
{
  const double abx = b.x - a.x;
  const double aby = b.y - a.y;
  const double len_sq = abx * abx + aby * aby;
  if (len_sq == 0.0) {
    return distance(p, a);
  }
  const double t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len_sq;
  const double clamped = std::clamp(t, 0.0, 1.0);
  const Waypoint foot{a.x + clamped * abx, a.y + clamped * aby};
  return distance(p, foot);
}

}  // namespace emotraj
