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

#include "emotraj/emotion.hpp"

#include "emotraj/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace emotraj
{

namespace
{

std::string to_lower(const std::string & s)
{
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string trim(const std::string & s)
{
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && is_space(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && is_space(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

bool parse_double(const std::string & field, double & out)
{
  const std::string t = trim(field);
  const char * first = t.data();
  const char * last = t.data() + t.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc() && result.ptr == last && std::isfinite(out);
}

void check_unit_range(double value, const std::string & where)
{
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream os;
    os << where << ": value " << value << " outside [0,1]";
    throw ParseError(os.str());
  }
}

std::vector<std::string> split_tab(const std::string & line)
{
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::string strip_cr(std::string line)
{
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

}  // namespace

bool operator==(const VadVector & a, const VadVector & b)
{
  return a.valence == b.valence && a.arousal == b.arousal && a.dominance == b.dominance;
}

bool is_valid(const VadVector & v)
{
  const auto ok = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  return ok(v.valence) && ok(v.arousal) && ok(v.dominance);
}

double vad_distance(const VadVector & a, const VadVector & b)
{
  const double dv = a.valence - b.valence;
  const double da = a.arousal - b.arousal;
  const double dd = a.dominance - b.dominance;
  return std::sqrt(dv * dv + da * da + dd * dd);
}

double IdfTable::weight_for(const std::string & term) const
{
  const auto it = weights.find(term);
  if (it != weights.end()) {
    return it->second;
  }
  return std::log(1.0 + static_cast<double>(document_count)) + 1.0;
}

std::vector<std::string> tokenize_filter(const std::string & text, const StopwordSet & stopwords)
{
  std::vector<std::string> tokens;
  std::string current;
  const auto flush = [&]() {
    if (!current.empty()) {
      if (stopwords.find(current) == stopwords.end()) {
        tokens.push_back(current);
      }
      current.clear();
    }
  };
  for (const char ch : text) {
    const auto uc = static_cast<unsigned char>(ch);
    if (std::isalpha(uc) != 0) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

IdfTable build_idf(const std::vector<std::string> & corpus, const StopwordSet & stopwords)
{
  if (corpus.empty()) {
    throw EmptyCorpus("idf table needs at least one document");
  }
  std::map<std::string, std::size_t> df;
  for (const auto & command : corpus) {
    const auto tokens = tokenize_filter(command, stopwords);
    const std::set<std::string> distinct(tokens.begin(), tokens.end());
    for (const auto & t : distinct) {
      ++df[t];
    }
  }
  IdfTable table;
  table.document_count = corpus.size();
  const double n = static_cast<double>(corpus.size());
  for (const auto & [term, count] : df) {
    table.weights[term] = std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0;
  }
  return table;
}

VadVector sentence_vad(
  const EmotionDistribution & dist, const LabelVadMap & map, double min_label_score)
{
  double total = 0.0;
  double v = 0.0;
  double a = 0.0;
  double d = 0.0;
  for (const auto & [label, score] : dist) {
    if (!std::isfinite(score)) {
      throw NonFiniteInput("score for label '" + label + "' is not finite");
    }
    if (score <= 0.0 || score < min_label_score) {
      continue;
    }
    const auto it = map.find(label);
    if (it == map.end()) {
      throw UnknownLabel("label '" + label + "' missing from the label-VAD map");
    }
    total += score;
    v += score * it->second.valence;
    a += score * it->second.arousal;
    d += score * it->second.dominance;
  }
  if (total <= 0.0) {
    throw ZeroMass("distribution carries no usable probability mass");
  }
  return {v / total, a / total, d / total};
}

VadVector word_vad(
  const std::string & command, const VadLexicon & lexicon, const IdfTable & idf,
  const StopwordSet & stopwords, const VadVector & fallback)
{
  const auto tokens = tokenize_filter(command, stopwords);
  std::map<std::string, std::size_t> tf;
  for (const auto & t : tokens) {
    ++tf[t];
  }
  double total = 0.0;
  double v = 0.0;
  double a = 0.0;
  double d = 0.0;
  for (const auto & [term, count] : tf) {
    const auto it = lexicon.entries.find(term);
    if (it == lexicon.entries.end()) {
      continue;
    }
    const double w = static_cast<double>(count) * idf.weight_for(term);
    total += w;
    v += w * it->second.valence;
    a += w * it->second.arousal;
    d += w * it->second.dominance;
  }
  if (total <= 0.0) {
    return fallback;
  }
  return {v / total, a / total, d / total};
}

VadVector exclamation_boost(const VadVector & vad, const std::string & command, double beta_ex)
{
  const auto n_excl = std::count(command.begin(), command.end(), '!');
  VadVector out = vad;
  out.arousal = std::min(1.0, vad.arousal + beta_ex * static_cast<double>(n_excl));
  return out;
}

VadVector fuse_vad(const VadVector & e_goe, const VadVector & e_words, double alpha)
{
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
    std::ostringstream os;
    os << "fusion weight " << alpha << " outside [0,1]";
    throw InvalidAlpha(os.str());
  }
  const double beta = 1.0 - alpha;
  return {
    alpha * e_goe.valence + beta * e_words.valence,
    alpha * e_goe.arousal + beta * e_words.arousal,
    alpha * e_goe.dominance + beta * e_words.dominance};
}

LabelBreakdown label_command(
  const std::string & command, const EmotionDistribution & dist, const LabelVadMap & map,
  const VadLexicon & lexicon, const IdfTable & idf, const StopwordSet & stopwords,
  const LabelConfig & config)
{
  LabelBreakdown out;
  out.sentence = sentence_vad(dist, map, config.min_label_score);
  const VadVector words = word_vad(command, lexicon, idf, stopwords, config.neutral);
  out.word_boosted = exclamation_boost(words, command, config.beta_ex);
  out.fused = fuse_vad(out.sentence, out.word_boosted, config.alpha);
  return out;
}

VadLexicon parse_vad_lexicon_tsv(std::istream & in, const std::string & name)
{
  VadLexicon lexicon;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (trim(line).empty()) {
      continue;
    }
    const auto fields = split_tab(line);
    std::ostringstream where;
    where << name << ":" << line_no;
    if (fields.size() < 4) {
      throw ParseError(where.str() + ": expected term<TAB>v<TAB>a<TAB>d");
    }
    double v = 0.0;
    double a = 0.0;
    double d = 0.0;
    const bool numeric =
      parse_double(fields[1], v) && parse_double(fields[2], a) && parse_double(fields[3], d);
    if (!numeric) {
      if (line_no == 1) {
        continue;  // header row
      }
      throw ParseError(where.str() + ": non-numeric VAD fields");
    }
    check_unit_range(v, where.str());
    check_unit_range(a, where.str());
    check_unit_range(d, where.str());
    const std::string term = to_lower(trim(fields[0]));
    if (term.empty()) {
      throw ParseError(where.str() + ": empty term");
    }
    lexicon.entries.insert_or_assign(term, VadVector{v, a, d});
  }
  if (lexicon.entries.empty()) {
    throw ParseError(name + ": no lexicon entries");
  }
  return lexicon;
}

VadLexicon load_vad_lexicon_tsv(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open");
  }
  return parse_vad_lexicon_tsv(in, path);
}

LabelVadMap parse_label_vad_map_json(std::istream & in, const std::string & name)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception & e) {
    throw ParseError(name + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(name + ": expected a JSON object label -> [v,a,d]");
  }
  LabelVadMap map;
  for (const auto & [label, value] : doc.items()) {
    if (!value.is_array() || value.size() != 3) {
      throw ParseError(name + ": label '" + label + "' needs a 3-element array");
    }
    VadVector vad;
    try {
      vad.valence = value[0].get<double>();
      vad.arousal = value[1].get<double>();
      vad.dominance = value[2].get<double>();
    } catch (const nlohmann::json::exception & e) {
      throw ParseError(name + ": label '" + label + "': " + e.what());
    }
    check_unit_range(vad.valence, name + ": label '" + label + "'");
    check_unit_range(vad.arousal, name + ": label '" + label + "'");
    check_unit_range(vad.dominance, name + ": label '" + label + "'");
    map[label] = vad;
  }
  if (map.empty()) {
    throw ParseError(name + ": empty label-VAD map");
  }
  return map;
}

LabelVadMap load_label_vad_map_json(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open");
  }
  return parse_label_vad_map_json(in, path);
}

StopwordSet parse_stopwords(std::istream & in)
{
  StopwordSet words;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string word = to_lower(trim(strip_cr(raw)));
    if (!word.empty()) {
      words.insert(word);
    }
  }
  return words;
}

StopwordSet load_stopwords(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open");
  }
  return parse_stopwords(in);
}

}  // namespace emotraj
