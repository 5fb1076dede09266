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

#ifndef EMOTRAJ_TRAJ_FEATURES_HPP_
#define EMOTRAJ_TRAJ_FEATURES_HPP_

#include "emotraj/geometry.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace emotraj
{

/// Column order used everywhere a feature table is serialized.
inline constexpr std::array<std::string_view, 4> kFeatureNames = {
  "straightness", "mean_turn", "angle_variance", "sinuosity"};

/// Geometric shape descriptors of one trajectory. Features that are
/// undefined for the input (too few distinct waypoints) stay empty instead
/// of being zeroed.
struct FeatureVector
{
  std::optional<double> straightness;    // chord / path length, in (0, 1]
  std::optional<double> mean_turn;       // mean |turn angle| [rad]
  std::optional<double> angle_variance;  // population variance of turn angles [rad^2]
  std::optional<double> sinuosity;       // mean lateral deviation from the chord line [m]

  std::optional<double> by_index(std::size_t i) const;
};

/// Chord-to-path-length ratio. A path shorter than kSegmentEpsilon counts as
/// maximally direct (1.0). Throws DegenerateTrajectory on < 2 points.
double straightness(const Trajectory & traj);

/// Mean absolute turn angle over the wrapped heading changes.
/// Throws DegenerateTrajectory on < 3 distinct points.
double mean_turn(const Trajectory & traj);

/// Population variance (denominator = number of turns) of the wrapped turn
/// angles around their arithmetic mean. Throws DegenerateTrajectory on < 3
/// distinct points.
double angle_variance(const Trajectory & traj);

/// Mean perpendicular distance of all waypoints from the infinite line
/// through the first and last waypoint, via the 2D cross product. When the
/// chord is shorter than kSegmentEpsilon, falls back to the mean distance
/// from the first waypoint. Throws DegenerateTrajectory on < 2 points.
double sinuosity_lateral(const Trajectory & traj);

/// All four features in one pass. Zero-length segments are merged first;
/// degenerate features are reported as empty optionals.
FeatureVector extract_features(const Trajectory & traj);

}  // namespace emotraj

#endif  // EMOTRAJ_TRAJ_FEATURES_HPP_
