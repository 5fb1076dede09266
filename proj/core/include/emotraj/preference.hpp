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

#ifndef EMOTRAJ_PREFERENCE_HPP_
#define EMOTRAJ_PREFERENCE_HPP_

#include "emotraj/emotion.hpp"
#include "emotraj/geometry.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace emotraj
{

/// A command together with its VAD label.
struct CommandVariant
{
  std::string command;
  VadVector vad;
};

/// An original command and K paraphrases of it with shifted affect.
struct AugmentedCommandSet
{
  CommandVariant original;
  std::vector<CommandVariant> variants;
};

/// Index of the variant whose VAD deviates most (L2) from the original.
/// Ties resolve to the lowest index. Throws EmptyVariants.
std::size_t select_negative(const AugmentedCommandSet & set);

struct DpoConfig
{
  double beta{0.1};
};

/// -log sigmoid(beta * (logp_preferred - logp_rejected)), evaluated in a
/// softplus form that cannot overflow. Equals ln 2 at zero margin.
/// Throws NonFiniteInput on non-finite log-likelihoods and ConfigError
/// when beta is not positive.
double dpo_loss(double logp_preferred, double logp_rejected, const DpoConfig & config = {});

/// logp_preferred - logp_rejected. Throws NonFiniteInput.
double reward_margin(double logp_preferred, double logp_rejected);

/// One record of the pair-construction input: the augmented command set,
/// its ground-truth trajectory, and candidate rejected trajectories keyed
/// by variant index.
struct PreferenceInput
{
  std::string id;
  AugmentedCommandSet set;
  Trajectory gt_traj;
  std::map<std::size_t, Trajectory> rejected_trajs;
};

/// A constructed pseudo-preference pair: ground truth preferred over the
/// trajectory sampled from the most deviant variant.
struct PreferencePair
{
  std::string id;
  std::size_t negative_index{0};
  double vad_deviation{0.0};
  Trajectory preferred;
  Trajectory rejected;
};

/// Builds one pair per input record. Throws MissingTrajectory when the
/// ground truth is absent or no rejected trajectory matches the selected
/// negative variant.
std::vector<PreferencePair> build_pairs(const std::vector<PreferenceInput> & inputs);

}  // namespace emotraj

#endif  // EMOTRAJ_PREFERENCE_HPP_
