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

#include "emotraj/traj_features.hpp"

#include "emotraj/errors.hpp"

#include <cmath>
#include <vector>

namespace emotraj
{

namespace
{

double straightness_of(const std::vector<Waypoint> & pts)
{
  double length = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    length += distance(pts[i - 1], pts[i]);
  }
  if (length < kSegmentEpsilon) {
    return 1.0;  // stationary path: maximally direct
  }
  return distance(pts.front(), pts.back()) / length;
}

double sinuosity_of(const std::vector<Waypoint> & pts)
{
  const Waypoint & start = pts.front();
  const Waypoint & end = pts.back();
  const double chord_x = end.x - start.x;
  const double chord_y = end.y - start.y;
  const double chord = std::hypot(chord_x, chord_y);
  double sum = 0.0;
  if (chord < kSegmentEpsilon) {
    // Closed or stationary path: deviation from the start point instead.
    for (const auto & p : pts) {
      sum += distance(p, start);
    }
  } else {
    for (const auto & p : pts) {
      const double cross = chord_x * (start.y - p.y) - chord_y * (start.x - p.x);
      sum += std::abs(cross) / chord;
    }
  }
  return sum / static_cast<double>(pts.size());
}

double mean_turn_of(const std::vector<double> & turns)
{
  double sum = 0.0;
  for (const double t : turns) {
    sum += std::abs(t);
  }
  return sum / static_cast<double>(turns.size());
}

double angle_variance_of(const std::vector<double> & turns)
{
  double mean = 0.0;
  for (const double t : turns) {
    mean += t;
  }
  mean /= static_cast<double>(turns.size());
  double var = 0.0;
  for (const double t : turns) {
    var += (t - mean) * (t - mean);
  }
  return var / static_cast<double>(turns.size());
}

}  // namespace

std::optional<double> FeatureVector::by_index(std::size_t i) const
{
  switch (i) {
    case 0:
      return straightness;
    case 1:
      return mean_turn;
    case 2:
      return angle_variance;
    case 3:
      return sinuosity;
    default:
      return std::nullopt;
  }
}

double straightness(const Trajectory & traj)
{
  validate_trajectory(traj);
  if (traj.size() < 2) {
    throw DegenerateTrajectory("straightness needs at least two waypoints");
  }
  return straightness_of(traj.points);
}

double mean_turn(const Trajectory & traj)
{
  return mean_turn_of(turn_angles(traj));
}

double angle_variance(const Trajectory & traj)
{
  return angle_variance_of(turn_angles(traj));
}

double sinuosity_lateral(const Trajectory & traj)
{
  validate_trajectory(traj);
  if (traj.size() < 2) {
    throw DegenerateTrajectory("sinuosity needs at least two waypoints");
  }
  return sinuosity_of(traj.points);
}

FeatureVector extract_features(const Trajectory & traj)
{
  validate_trajectory(traj);
  const auto pts = effective_points(traj);

  FeatureVector out;
  if (pts.size() >= 2) {
    out.straightness = straightness_of(pts);
    out.sinuosity = sinuosity_of(pts);
  }
  if (pts.size() >= 3) {
    std::vector<double> theta;
    theta.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      theta.push_back(std::atan2(pts[i + 1].y - pts[i].y, pts[i + 1].x - pts[i].x));
    }
    std::vector<double> turns;
    turns.reserve(theta.size() - 1);
    for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
      turns.push_back(wrap_angle(theta[i + 1] - theta[i]));
    }
    out.mean_turn = mean_turn_of(turns);
    out.angle_variance = angle_variance_of(turns);
  }
  return out;
}

}  // namespace emotraj
