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

#ifndef EMOTRAJ_TRAJ_METRICS_HPP_
#define EMOTRAJ_TRAJ_METRICS_HPP_

#include "emotraj/geometry.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace emotraj
{

/// Axis-aligned bounding box. Coordinates may be normalized or raw; only the
/// ordering invariants x_min <= x_max, y_min <= y_max are required.
struct BBox
{
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
};

/// Throws InvalidBox on inverted or non-finite coordinates.
void validate_bbox(const BBox & box);

/// How the per-record planning-accuracy gate is applied.
enum class PaMode
{
  kFinalPoint,    // indicator on the final waypoint pair (default)
  kPerPointMean,  // mean of per-waypoint indicators (requires equal lengths)
};

/// Aggregation over multiple plausible ground-truth trajectories.
enum class MultiGtAggregation
{
  kMin,
  kMean,
};

/// Mean Euclidean displacement over index-aligned waypoints.
/// Throws LengthMismatch when the trajectories differ in length.
double ade(const Trajectory & pred, const Trajectory & gt);

/// Euclidean displacement of the final waypoints.
double fde(const Trajectory & pred, const Trajectory & gt);

/// Discrete Frechet distance: minimum over monotone couplings of the maximum
/// pairwise distance, via the standard O(|a|*|b|) coupling-measure recursion.
double discrete_frechet(const Trajectory & a, const Trajectory & b);

/// Dynamic time warping cost: minimum over order-preserving warping paths of
/// the summed pairwise Euclidean costs. Unweighted steps (i+1,j), (i,j+1),
/// (i+1,j+1); the path couples both first points and both last points.
double dtw(const Trajectory & a, const Trajectory & b);

/// Symmetric segment-path distance: 0.5 * [SPD(a,b) + SPD(b,a)], where
/// SPD(x,y) is the mean over points of x of the minimum distance to any
/// segment of y. A single-point polyline acts as a degenerate segment.
double sspd(const Trajectory & a, const Trajectory & b);

/// Planning accuracy within gate meters. kFinalPoint returns the 0/1
/// indicator that the final displacement is <= gate; kPerPointMean returns
/// the fraction of index-aligned waypoints within the gate.
/// Throws InvalidGate when gate <= 0.
double pa_g(
  const Trajectory & pred, const Trajectory & gt, double gate,
  PaMode mode = PaMode::kFinalPoint);

/// Intersection area over union area; 0 when the union has zero area.
double bbox_iou(const BBox & a, const BBox & b);

/// Uniform arc-length resampling to n waypoints (endpoints preserved).
/// A zero-length path yields n copies of the first point. Requires n >= 2.
Trajectory resample_uniform(const Trajectory & traj, std::size_t n);

/// One row of the evaluation suite. pa holds (gate, value) pairs in the
/// order the gates were supplied.
struct MetricResult
{
  double ade = 0.0;
  double fde = 0.0;
  double frechet = 0.0;
  double dtw = 0.0;
  double sspd = 0.0;
  std::vector<std::pair<double, double>> pa;
};

/// All metrics for one predicted/ground-truth pair.
MetricResult evaluate_pair(
  const Trajectory & pred, const Trajectory & gt, std::span<const double> gates,
  PaMode pa_mode = PaMode::kFinalPoint);

/// Aggregates each distance metric over several ground truths (min or mean).
/// PA is always computed against the best-matching ground truth by FDE.
MetricResult evaluate_multi_gt(
  const Trajectory & pred, const std::vector<Trajectory> & gts, std::span<const double> gates,
  MultiGtAggregation aggregation = MultiGtAggregation::kMin,
  PaMode pa_mode = PaMode::kFinalPoint);

}  // namespace emotraj

#endif  // EMOTRAJ_TRAJ_METRICS_HPP_
