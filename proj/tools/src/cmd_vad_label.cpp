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

#include "commands.hpp"

#include <emotraj/emotion.hpp>
#include <emotraj/errors.hpp>
#include <emotraj/parallel.hpp>

#include <algorithm>
#include <fstream>
#include <utility>

namespace emotraj::tools
{

namespace
{

struct LabelInput
{
  std::size_t line{0};
  nlohmann::json id;
  std::string command;
  EmotionDistribution scores;
};

LabelInput parse_record(const JsonlRecord & record)
{
  LabelInput input;
  input.line = record.line;
  input.id = require_id(record.value);
  const auto & value = record.value;
  if (!value.contains("command") || !value["command"].is_string()) {
    throw ParseError("record needs a string 'command'");
  }
  input.command = value["command"].get<std::string>();
  if (!value.contains("scores") || !value["scores"].is_object()) {
    throw ParseError("record needs an object 'scores'");
  }
  for (const auto & [label, score] : value["scores"].items()) {
    if (!score.is_number()) {
      throw ParseError("score for label '" + label + "' must be a number");
    }
    const double s = score.get<double>();
    if (!(s >= 0.0 && s <= 1.0)) {
      throw ParseError("score for label '" + label + "' outside [0,1]");
    }
    input.scores[label] = s;
  }
  return input;
}

std::vector<std::string> read_corpus_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open");
  }
  std::vector<std::string> corpus;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      corpus.push_back(line);
    }
  }
  return corpus;
}

}  // namespace

int run_vad_label(const GlobalOptions & global, const VadLabelOptions & opt)
{
  RunConfig config = base_config(global);
  if (opt.alpha) {
    config.alpha = *opt.alpha;
  }
  if (opt.beta_ex) {
    config.beta_ex = *opt.beta_ex;
  }
  if (opt.min_label_score) {
    config.min_label_score = *opt.min_label_score;
  }
  validate_config(config);

  const VadLexicon lexicon = load_vad_lexicon_tsv(opt.lexicon);
  const LabelVadMap label_map = load_label_vad_map_json(opt.label_map);
  const StopwordSet stopwords = opt.stopwords.empty() ? StopwordSet{} : load_stopwords(opt.stopwords);

  JsonlFile file = load_jsonl(opt.input);
  std::vector<JsonlIssue> issues = std::move(file.issues);
  std::vector<LabelInput> inputs;
  for (const auto & record : data_records(file)) {
    try {
      inputs.push_back(parse_record(record));
    } catch (const Error & e) {
      issues.push_back({record.line, e.what()});
    }
  }

  // The idf corpus defaults to the commands being labeled; an external
  // corpus file (one command per line) can stand in for the full dataset.
  std::vector<std::string> corpus;
  if (!opt.idf_corpus.empty()) {
    corpus = read_corpus_file(opt.idf_corpus);
  } else {
    for (const auto & input : inputs) {
      corpus.push_back(input.command);
    }
  }
  IdfTable idf;
  if (!corpus.empty()) {
    idf = build_idf(corpus, stopwords);
  }

  struct Outcome
  {
    bool ok{false};
    std::string text;
    std::string error;
  };
  const LabelConfig label_config = config.label_config();
  const auto outcomes = parallel_map(inputs, config.jobs, [&](const LabelInput & input) {
    Outcome outcome;
    try {
      const LabelBreakdown breakdown =
        label_command(input.command, input.scores, label_map, lexicon, idf, stopwords, label_config);
      nlohmann::ordered_json out;
      out["id"] = input.id;
      out["vad"] = nlohmann::json::array(
        {breakdown.fused.valence, breakdown.fused.arousal, breakdown.fused.dominance});
      out["e_goe"] = nlohmann::json::array(
        {breakdown.sentence.valence, breakdown.sentence.arousal, breakdown.sentence.dominance});
      out["e_words"] = nlohmann::json::array(
        {breakdown.word_boosted.valence, breakdown.word_boosted.arousal,
         breakdown.word_boosted.dominance});
      outcome.text = out.dump() + "\n";
      outcome.ok = true;
    } catch (const std::exception & e) {
      outcome.error = e.what();
    }
    return outcome;
  });

  std::string content = meta_line("vad-label", config);
  std::size_t processed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (outcomes[i].ok) {
      content += outcomes[i].text;
      ++processed;
    } else {
      issues.push_back({inputs[i].line, outcomes[i].error});
    }
  }
  std::sort(issues.begin(), issues.end(), [](const JsonlIssue & a, const JsonlIssue & b) {
    return a.line < b.line;
  });
  emit_output(global, content);
  return report_issues("vad-label", opt.input, processed, issues);
}

}  // namespace emotraj::tools
