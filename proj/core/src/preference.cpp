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

#include "emotraj/preference.hpp"

#include "emotraj/errors.hpp"

#include <cmath>
#include <sstream>

namespace emotraj
{

std::size_t select_negative(const AugmentedCommandSet & set)
{
  if (set.variants.empty()) {
    throw EmptyVariants("augmented command set has no variants");
  }
  std::size_t best = 0;
  double best_dist = vad_distance(set.variants[0].vad, set.original.vad);
  for (std::size_t k = 1; k < set.variants.size(); ++k) {
    const double dist = vad_distance(set.variants[k].vad, set.original.vad);
    if (dist > best_dist) {
      best = k;
      best_dist = dist;
    }
  }
  return best;
}

double dpo_loss(double logp_preferred, double logp_rejected, const DpoConfig & config)
{
  if (!(config.beta > 0.0) || !std::isfinite(config.beta)) {
    std::ostringstream os;
    os << "dpo beta must be positive, got " << config.beta;
    throw ConfigError(os.str());
  }
  const double x = config.beta * reward_margin(logp_preferred, logp_rejected);
  // -log sigmoid(x) = softplus(-x) = max(-x, 0) + log1p(exp(-|x|))
  return std::max(-x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double reward_margin(double logp_preferred, double logp_rejected)
{
  if (!std::isfinite(logp_preferred) || !std::isfinite(logp_rejected)) {
    throw NonFiniteInput("log-likelihoods must be finite");
  }
  return logp_preferred - logp_rejected;
}

std::vector<PreferencePair> build_pairs(const std::vector<PreferenceInput> & inputs)
{
  std::vector<PreferencePair> pairs;
  pairs.reserve(inputs.size());
  for (const auto & input : inputs) {
    if (input.gt_traj.empty()) {
      throw MissingTrajectory("record '" + input.id + "': no ground-truth trajectory");
    }
    PreferencePair pair;
    pair.id = input.id;
    pair.negative_index = select_negative(input.set);
    pair.vad_deviation =
      vad_distance(input.set.variants[pair.negative_index].vad, input.set.original.vad);
    const auto it = input.rejected_trajs.find(pair.negative_index);
    if (it == input.rejected_trajs.end()) {
      std::ostringstream os;
      os << "record '" << input.id << "': no rejected trajectory for variant "
         << pair.negative_index;
      throw MissingTrajectory(os.str());
    }
    pair.preferred = input.gt_traj;
    pair.rejected = it->second;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace emotraj
