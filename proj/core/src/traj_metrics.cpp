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

#include "emotraj/traj_metrics.hpp"

#include "emotraj/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace emotraj
{

namespace
{

// Minimum distance from point p to polyline y, treating a single-point
// polyline as a degenerate segment.
double point_to_polyline_distance(const Waypoint & p, const Trajectory & y)
{
  if (y.size() == 1) {
    return distance(p, y.front());
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < y.size(); ++i) {
    best = std::min(best, point_to_segment_distance(p, y.points[i - 1], y.points[i]));
  }
  return best;
}

// Directed mean point-to-polyline distance SPD(x, y).
double spd(const Trajectory & x, const Trajectory & y)
{
  double sum = 0.0;
  for (const auto & p : x.points) {
    sum += point_to_polyline_distance(p, y);
  }
  return sum / static_cast<double>(x.size());
}

}  // namespace

void validate_bbox(const BBox & box)
{
  const bool finite = std::isfinite(box.x_min) && std::isfinite(box.y_min) &&
                      std::isfinite(box.x_max) && std::isfinite(box.y_max);
  if (!finite) {
    throw InvalidBox("bounding box coordinates must be finite");
  }
  if (box.x_min > box.x_max || box.y_min > box.y_max) {
    throw InvalidBox("bounding box coordinates are inverted");
  }
}

double ade(const Trajectory & pred, const Trajectory & gt)
{
  validate_trajectory(pred);
  validate_trajectory(gt);
  if (pred.size() != gt.size()) {
    throw LengthMismatch(
      "ade requires equal-length trajectories (" + std::to_string(pred.size()) + " vs " +
      std::to_string(gt.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    sum += distance(pred.points[i], gt.points[i]);
  }
  return sum / static_cast<double>(pred.size());
}

double fde(const Trajectory & pred, const Trajectory & gt)
{
  validate_trajectory(pred);
  validate_trajectory(gt);
  return distance(pred.back(), gt.back());
}

double discrete_frechet(const Trajectory & a, const Trajectory & b)
{
  validate_trajectory(a);
  validate_trajectory(b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // Rolling one-row DP over the coupling measure.
  std::vector<double> prev(m), curr(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double d = distance(a.points[0], b.points[j]);
    prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = distance(a.points[i], b.points[j]);
      double reach = prev[j];
      if (j > 0) {
        reach = std::min(reach, std::min(prev[j - 1], curr[j - 1]));
      }
      curr[j] = std::max(reach, d);
    }
    std::swap(prev, curr);
  }
  return prev[m - 1];
}

double dtw(const Trajectory & a, const Trajectory & b)
{
  validate_trajectory(a);
  validate_trajectory(b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<double> prev(m), curr(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double d = distance(a.points[0], b.points[j]);
    prev[j] = j == 0 ? d : prev[j - 1] + d;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = distance(a.points[i], b.points[j]);
      double best = prev[j];
      if (j > 0) {
        best = std::min(best, std::min(prev[j - 1], curr[j - 1]));
      }
      curr[j] = best + d;
    }
    std::swap(prev, curr);
  }
  return prev[m - 1];
}

double sspd(const Trajectory & a, const Trajectory & b)
{
  validate_trajectory(a);
  validate_trajectory(b);
  return 0.5 * (spd(a, b) + spd(b, a));
}

double pa_g(const Trajectory & pred, const Trajectory & gt, double gate, PaMode mode)
{
  if (!(gate > 0.0)) {
    throw InvalidGate("planning accuracy gate must be positive");
  }
  validate_trajectory(pred);
  validate_trajectory(gt);
  if (mode == PaMode::kFinalPoint) {
    return distance(pred.back(), gt.back()) <= gate ? 1.0 : 0.0;
  }
  if (pred.size() != gt.size()) {
    throw LengthMismatch("per-point planning accuracy requires equal-length trajectories");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (distance(pred.points[i], gt.points[i]) <= gate) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

double bbox_iou(const BBox & a, const BBox & b)
{
  validate_bbox(a);
  validate_bbox(b);
  const double ix = std::max(0.0, std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min));
  const double iy = std::max(0.0, std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min));
  const double inter = ix * iy;
  const double area_a = (a.x_max - a.x_min) * (a.y_max - a.y_min);
  const double area_b = (b.x_max - b.x_min) * (b.y_max - b.y_min);
  const double uni = area_a + area_b - inter;
  if (uni <= 0.0) {
    return 0.0;
  }
  return inter / uni;
}

Trajectory resample_uniform(const Trajectory & traj, std::size_t n)
{
  validate_trajectory(traj);
  if (n < 2) {
    throw ConfigError("resampling needs at least two output waypoints");
  }
  const double total = path_length(traj);
  Trajectory out;
  out.points.reserve(n);
  if (total < kSegmentEpsilon) {
    out.points.assign(n, traj.front());
    return out;
  }
  // Walk the polyline once, emitting points at multiples of total/(n-1).
  const double step = total / static_cast<double>(n - 1);
  out.points.push_back(traj.front());
  std::size_t seg = 1;
  double seg_start_arc = 0.0;
  double seg_len = distance(traj.points[0], traj.points[1]);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double target = step * static_cast<double>(k);
    while (seg + 1 < traj.size() && seg_start_arc + seg_len < target) {
      seg_start_arc += seg_len;
      ++seg;
      seg_len = distance(traj.points[seg - 1], traj.points[seg]);
    }
    const double t = seg_len > 0.0 ? (target - seg_start_arc) / seg_len : 0.0;
    const auto & a = traj.points[seg - 1];
    const auto & b = traj.points[seg];
    out.points.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  out.points.push_back(traj.back());
  return out;
}

MetricResult evaluate_pair(
  const Trajectory & pred, const Trajectory & gt, std::span<const double> gates, PaMode pa_mode)
{
  MetricResult r;
  r.ade = ade(pred, gt);
  r.fde = fde(pred, gt);
  r.frechet = discrete_frechet(pred, gt);
  r.dtw = dtw(pred, gt);
  r.sspd = sspd(pred, gt);
  r.pa.reserve(gates.size());
  for (const double g : gates) {
    r.pa.emplace_back(g, pa_g(pred, gt, g, pa_mode));
  }
  return r;
}

MetricResult evaluate_multi_gt(
  const Trajectory & pred, const std::vector<Trajectory> & gts, std::span<const double> gates,
  MultiGtAggregation aggregation, PaMode pa_mode)
{
  if (gts.empty()) {
    throw DegenerateTrajectory("multi-ground-truth evaluation needs at least one ground truth");
  }
  std::vector<MetricResult> per_gt;
  per_gt.reserve(gts.size());
  for (const auto & gt : gts) {
    MetricResult r;
    r.ade = ade(pred, gt);
    r.fde = fde(pred, gt);
    r.frechet = discrete_frechet(pred, gt);
    r.dtw = dtw(pred, gt);
    r.sspd = sspd(pred, gt);
    per_gt.push_back(std::move(r));
  }
  // Best-matching ground truth by FDE; ties keep the lowest index.
  std::size_t best_by_fde = 0;
  for (std::size_t i = 1; i < per_gt.size(); ++i) {
    if (per_gt[i].fde < per_gt[best_by_fde].fde) {
      best_by_fde = i;
    }
  }

  MetricResult out;
  const auto aggregate = [&](auto field) {
    if (aggregation == MultiGtAggregation::kMin) {
      double best = per_gt.front().*field;
      for (const auto & r : per_gt) {
        best = std::min(best, r.*field);
      }
      return best;
    }
    double sum = 0.0;
    for (const auto & r : per_gt) {
      sum += r.*field;
    }
    return sum / static_cast<double>(per_gt.size());
  };
  out.ade = aggregate(&MetricResult::ade);
  out.fde = aggregate(&MetricResult::fde);
  out.frechet = aggregate(&MetricResult::frechet);
  out.dtw = aggregate(&MetricResult::dtw);
  out.sspd = aggregate(&MetricResult::sspd);

  out.pa.reserve(gates.size());
  for (const double g : gates) {
    out.pa.emplace_back(g, pa_g(pred, gts[best_by_fde], g, pa_mode));
  }
  return out;
}

}  // namespace emotraj
