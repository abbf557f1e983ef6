// Copyright 2026 The prmlm Authors.
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

#include "prmlm/recognizer.hpp"

#include <cmath>
#include <stdexcept>

#include "prmlm/numeric.hpp"
#include "prmlm/rng.hpp"
#include "prmlm/spearman.hpp"

namespace prmlm {

double AcousticChannel::score(WordId true_word, WordId candidate,
                              std::size_t utterance,
                              std::size_t position) const {
  if (sim == nullptr) {
    throw std::invalid_argument("acoustic channel needs a similarity matrix");
  }
  double base = sim->score(true_word, candidate);
  if (base <= 0.0) {
    throw std::invalid_argument("candidate is not confusable with the true word");
  }
  if (sigma == 0.0) return base;
  std::uint64_t key = seed;
  key = key_combine(key, utterance);
  key = key_combine(key, position);
  key = key_combine(key, candidate);
  return base * std::exp(sigma * gaussian_from_key(key));
}

std::vector<WordId> decode_utterance(const BigramScorer& model,
                                     const AcousticChannel& channel,
                                     std::span<const WordId> sentence,
                                     const std::vector<ConfusableSet>& table,
                                     std::size_t utterance_index) {
  if (sentence.size() < 2 || sentence.front() != Vocabulary::kBos ||
      sentence.back() != Vocabulary::kEos) {
    throw std::invalid_argument("sentence must be [begin, ..., end] marked");
  }
  std::vector<WordId> decoded(sentence.begin(), sentence.end());
  for (std::size_t i = 1; i + 1 < sentence.size(); ++i) {
    WordId truth = sentence[i];
    WordId prev = sentence[i - 1];  // context is the true history
    // Candidates: the true word first, then its confusables (ascending id
    // after the score ordering); exact ties resolve to the earliest, i.e.
    // the true word, then the lowest id.
    double best_score = model.log_prob(prev, truth) +
                        std::log(channel.score(truth, truth, utterance_index, i));
    WordId best = truth;
    for (const auto& [alt, s] : table[truth].neighbors) {
      double score =
          model.log_prob(prev, alt) +
          std::log(channel.score(truth, alt, utterance_index, i));
      if (score > best_score) {
        best_score = score;
        best = alt;
      }
    }
    decoded[i] = best;
  }
  return decoded;
}

RecognitionResult run_recognition(const BigramScorer& model,
                                  const AcousticChannel& channel,
                                  const EncodedCorpus& corpus,
                                  const std::vector<ConfusableSet>& table) {
  RecognitionResult result;
  for (std::size_t u = 0; u < corpus.sentences.size(); ++u) {
    const auto& sentence = corpus.sentences[u];
    std::vector<WordId> decoded =
        decode_utterance(model, channel, sentence, table, u);
    UtteranceOutcome outcome;
    outcome.positions = sentence.size() - 2;
    for (std::size_t i = 1; i + 1 < sentence.size(); ++i) {
      if (decoded[i] == sentence[i]) ++outcome.correct;
    }
    result.total_positions += outcome.positions;
    result.total_correct += outcome.correct;
    result.utterances.push_back(outcome);
  }
  return result;
}

namespace {

std::string measure_name(std::size_t size) {
  return "prm@" + std::to_string(size);
}

}  // namespace

ExperimentReport run_experiment(const BigramModel& model,
                                const SimilarityMatrix& sim,
                                const EncodedCorpus& test,
                                const ExperimentConfig& config) {
  ExperimentReport report;
  report.measure_names.push_back("ppl");
  for (std::size_t size : config.measure_sizes) {
    report.measure_names.push_back(measure_name(size));
  }

  AcousticChannel channel{&sim, config.sigma, config.seed};
  auto decode_table = build_confusable_table(sim, config.decode_nb_simil);

  UnigramAdapter unigram(model);
  const BigramScorer* decode_model =
      config.decode_context == ContextMode::kBigram
          ? static_cast<const BigramScorer*>(&model)
          : static_cast<const BigramScorer*>(&unigram);

  RecognitionResult recognition =
      run_recognition(*decode_model, channel, test, decode_table);
  report.overall_accuracy = recognition.overall_accuracy();

  // Per-utterance rows: accuracy, perplexity, then the measure columns.
  // Size 0 reuses the perplexity value bit for bit.
  for (std::size_t u = 0; u < test.sentences.size(); ++u) {
    const auto& sentence = test.sentences[u];
    ExperimentRow row;
    row.utterance_id = "u" + std::to_string(u);
    row.positions = sentence.size() - 2;
    row.accuracy = recognition.utterances[u].accuracy();
    row.ppl = sentence_perplexity(model, sentence);
    for (std::size_t size : config.measure_sizes) {
      if (size == 0) {
        row.measures.push_back(row.ppl);
        continue;
      }
      PrmConfig prm_config;
      prm_config.nb_simil = size;
      prm_config.form = config.form;
      PrmScore score = prm_score_sentence(model, sim, sentence, prm_config);
      row.measures.push_back(prm_config.per_word_normalize ? score.per_word()
                                                           : score.log_value);
    }
    report.rows.push_back(std::move(row));
  }

  PerplexityResult corpus_ppl = perplexity(model, test);
  report.corpus_ppl = corpus_ppl.perplexity;
  for (std::size_t size : config.measure_sizes) {
    if (size == 0) {
      report.corpus_measures.push_back(corpus_ppl.perplexity);
      continue;
    }
    PrmConfig prm_config;
    prm_config.nb_simil = size;
    prm_config.form = config.form;
    PrmScore score = prm_score(model, sim, test, prm_config);
    report.corpus_measures.push_back(
        prm_config.per_word_normalize ? score.per_word() : score.log_value);
  }

  // Rank correlation of each measure column against per-utterance accuracy.
  std::vector<double> accuracy;
  for (const auto& row : report.rows) accuracy.push_back(row.accuracy);
  for (std::size_t m = 0; m < report.measure_names.size(); ++m) {
    MeasureCorrelation corr;
    corr.measure = report.measure_names[m];
    std::vector<double> values;
    for (const auto& row : report.rows) {
      values.push_back(m == 0 ? row.ppl : row.measures[m - 1]);
    }
    try {
      corr.r_s = spearman(values, accuracy);
      corr.defined = true;
    } catch (const std::exception& e) {
      corr.defined = false;
      corr.note = e.what();
    }
    report.correlations.push_back(std::move(corr));
  }
  return report;
}

}  // namespace prmlm
