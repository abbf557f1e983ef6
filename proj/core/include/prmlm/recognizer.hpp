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

#ifndef PRMLM_RECOGNIZER_HPP_
#define PRMLM_RECOGNIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prmlm/corpus.hpp"
#include "prmlm/ngram.hpp"
#include "prmlm/prm.hpp"
#include "prmlm/scorer.hpp"
#include "prmlm/similarity.hpp"
#include "prmlm/types.hpp"

namespace prmlm {

// Simulated acoustic front end. The score a candidate earns at a position is
// Sim(true, candidate) * exp(eps), eps ~ N(0, sigma). Draws are keyed by
// (seed, utterance, position, candidate), so a score never depends on
// evaluation order and reruns are identical.
struct AcousticChannel {
  const SimilarityMatrix* sim = nullptr;
  double sigma = 0.0;
  std::uint64_t seed = 42;

  double score(WordId true_word, WordId candidate, std::size_t utterance,
               std::size_t position) const;
};

// Per-position recognition: candidates are the true word plus its confusable
// set; the decoder picks argmax over log p(candidate | previous true word) +
// log acoustic score. Exact ties go to the true word, then the lowest id.
std::vector<WordId> decode_utterance(const BigramScorer& model,
                                     const AcousticChannel& channel,
                                     std::span<const WordId> sentence,
                                     const std::vector<ConfusableSet>& table,
                                     std::size_t utterance_index);

struct UtteranceOutcome {
  std::size_t positions = 0;
  std::size_t correct = 0;
  double accuracy() const {
    return positions == 0 ? 1.0
                          : static_cast<double>(correct) /
                                static_cast<double>(positions);
  }
};

struct RecognitionResult {
  std::vector<UtteranceOutcome> utterances;
  std::size_t total_positions = 0;
  std::size_t total_correct = 0;
  double overall_accuracy() const {
    return total_positions == 0 ? 1.0
                                : static_cast<double>(total_correct) /
                                      static_cast<double>(total_positions);
  }
};

RecognitionResult run_recognition(const BigramScorer& model,
                                  const AcousticChannel& channel,
                                  const EncodedCorpus& corpus,
                                  const std::vector<ConfusableSet>& table);

// End-to-end accuracy-versus-measure experiment: decode every test
// utterance through the channel, score it with perplexity and with the
// measure at each requested neighborhood size, then rank-correlate each
// column against per-utterance accuracy. Size 0 reuses the perplexity
// value, bit for bit.
enum class ContextMode { kBigram, kUnigram };

struct ExperimentConfig {
  std::vector<std::size_t> measure_sizes = {0, 10, 20};
  std::size_t decode_nb_simil = 10;
  ContextMode decode_context = ContextMode::kBigram;
  PrmForm form = PrmForm::kDirect;
  double sigma = 0.5;
  std::uint64_t seed = 42;
};

struct ExperimentRow {
  std::string utterance_id;
  std::size_t positions = 0;
  double accuracy = 0.0;
  double ppl = 0.0;
  std::vector<double> measures;  // parallel to measure_names
};

struct MeasureCorrelation {
  std::string measure;
  bool defined = false;
  double r_s = 0.0;
  std::string note;  // reason when undefined
};

struct ExperimentReport {
  std::vector<std::string> measure_names;  // "ppl" first, then "prm@K"
  std::vector<ExperimentRow> rows;
  double overall_accuracy = 0.0;
  double corpus_ppl = 0.0;
  std::vector<double> corpus_measures;  // corpus-level, parallel to names[1..]
  std::vector<MeasureCorrelation> correlations;
};

ExperimentReport run_experiment(const BigramModel& model,
                                const SimilarityMatrix& sim,
                                const EncodedCorpus& test,
                                const ExperimentConfig& config);

}  // namespace prmlm

#endif  // PRMLM_RECOGNIZER_HPP_
