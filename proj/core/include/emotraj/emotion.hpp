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

#ifndef EMOTRAJ_EMOTION_HPP_
#define EMOTRAJ_EMOTION_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace emotraj
{

/// Continuous emotion coordinates. Each axis is normalized to [0, 1]:
/// valence = positivity, arousal = activation or urgency, dominance =
/// sense of control.
struct VadVector
{
  double valence{0.5};
  double arousal{0.5};
  double dominance{0.5};
};

bool operator==(const VadVector & a, const VadVector & b);

/// Midpoint of the VAD cube; the fallback label when no signal survives.
inline constexpr VadVector kNeutralVad{0.5, 0.5, 0.5};

/// True when every component is finite and inside [0, 1].
bool is_valid(const VadVector & v);

/// Euclidean distance between two points of the VAD cube.
double vad_distance(const VadVector & a, const VadVector & b);

/// Classifier output: emotion label -> probability. An ordered map keeps
/// the weighted-sum accumulation order deterministic.
using EmotionDistribution = std::map<std::string, double>;

/// Dictionary assigning a VAD point to every label a distribution may
/// contain.
using LabelVadMap = std::map<std::string, VadVector>;

using StopwordSet = std::set<std::string>;

/// Affect lexicon keyed by lowercase term.
struct VadLexicon
{
  std::map<std::string, VadVector> entries;
};

/// Smoothed inverse document frequencies over a command corpus.
struct IdfTable
{
  std::map<std::string, double> weights;
  std::size_t document_count{0};

  /// Weight of a term; terms unseen at build time get the smoothing
  /// floor ln(1 + N) + 1.
  double weight_for(const std::string & term) const;
};

/// Splits text into lowercase alphabetic tokens. Every non-letter acts as
/// a separator, then stop words are removed. Token order is preserved.
std::vector<std::string> tokenize_filter(const std::string & text, const StopwordSet & stopwords);

/// Builds idf(t) = ln((1 + N) / (1 + df(t))) + 1 where N is the corpus
/// size and df counts documents whose filtered tokens contain t.
/// Throws EmptyCorpus when the corpus is empty.
IdfTable build_idf(const std::vector<std::string> & corpus, const StopwordSet & stopwords);

/// Confidence-weighted mean of the label VADs. Labels scoring below
/// min_label_score (or exactly zero) contribute nothing and are not
/// looked up. Throws UnknownLabel for a contributing label missing from
/// the map and ZeroMass when no label contributes.
VadVector sentence_vad(
  const EmotionDistribution & dist, const LabelVadMap & map, double min_label_score = 0.0);

/// TF-IDF-weighted mean of lexicon VADs over the command's filtered
/// tokens. Tokens absent from the lexicon are skipped; when none survive
/// the fallback vector is returned.
VadVector word_vad(
  const std::string & command, const VadLexicon & lexicon, const IdfTable & idf,
  const StopwordSet & stopwords, const VadVector & fallback = kNeutralVad);

/// Raises arousal by beta_ex per '!' in the command, clamped at 1.
/// Valence and dominance pass through unchanged.
VadVector exclamation_boost(const VadVector & vad, const std::string & command, double beta_ex);

/// Component-wise alpha * e_goe + (1 - alpha) * e_words.
/// Throws InvalidAlpha unless alpha is finite and inside [0, 1].
VadVector fuse_vad(const VadVector & e_goe, const VadVector & e_words, double alpha);

struct LabelConfig
{
  double alpha{0.5};
  double beta_ex{0.05};
  double min_label_score{0.0};
  VadVector neutral{kNeutralVad};
};

/// Pipeline result: the fused label plus both branch vectors, kept for
/// audit output.
struct LabelBreakdown
{
  VadVector fused;
  VadVector sentence;
  VadVector word_boosted;
};

/// Full labeling pipeline. The exclamation boost is applied to the
/// word-level branch before fusion, so the sentence branch dampens
/// punctuation urgency by alpha.
LabelBreakdown label_command(
  const std::string & command, const EmotionDistribution & dist, const LabelVadMap & map,
  const VadLexicon & lexicon, const IdfTable & idf, const StopwordSet & stopwords,
  const LabelConfig & config = {});

// File loaders. parse_* read a stream and tag diagnostics with `name`;
// load_* open the named file. Values outside [0, 1] are rejected, not
// clamped, so a wrong-version data file fails fast.

/// TSV rows `term<TAB>valence<TAB>arousal<TAB>dominance`; one optional
/// header row. Terms are lowercased on load.
VadLexicon parse_vad_lexicon_tsv(std::istream & in, const std::string & name = "<lexicon>");
VadLexicon load_vad_lexicon_tsv(const std::string & path);

/// JSON object mapping label -> [valence, arousal, dominance].
LabelVadMap parse_label_vad_map_json(std::istream & in, const std::string & name = "<label-map>");
LabelVadMap load_label_vad_map_json(const std::string & path);

/// One word per line; blank lines ignored; words lowercased.
StopwordSet parse_stopwords(std::istream & in);
StopwordSet load_stopwords(const std::string & path);

}  // namespace emotraj

#endif  // EMOTRAJ_EMOTION_HPP_
