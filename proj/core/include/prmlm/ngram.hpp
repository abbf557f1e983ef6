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

#ifndef PRMLM_NGRAM_HPP_
#define PRMLM_NGRAM_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

#include "prmlm/corpus.hpp"
#include "prmlm/scorer.hpp"
#include "prmlm/types.hpp"
#include "prmlm/vocab.hpp"

namespace prmlm {

// Adjacent-pair counts over boundary-marked sentences.
// Invariants: context_total[v] == sum_w pair count (v, w), and
// successor_count[w] == sum_v pair count (v, w) == occurrences of w as a
// predicted token (so successor_count[kBos] == 0).
struct BigramCounts {
  std::unordered_map<std::uint64_t, std::uint64_t> pairs;
  std::vector<std::uint64_t> context_total;
  std::vector<std::uint64_t> successor_count;
  std::uint64_t total_positions = 0;  // scored positions == sum context_total

  static std::uint64_t key(WordId prev, WordId w) {
    return (static_cast<std::uint64_t>(prev) << 32) | w;
  }
  std::uint64_t pair_count(WordId prev, WordId w) const {
    auto it = pairs.find(key(prev, w));
    return it == pairs.end() ? 0 : it->second;
  }
  // Pair keys in ascending (prev, w) order, for deterministic iteration.
  std::vector<std::uint64_t> sorted_keys() const;
};

BigramCounts count_bigrams(const EncodedCorpus& corpus,
                           const Vocabulary& vocab);

// Bigram model with additive smoothing:
//   p(w | v) = (count(v, w) + alpha) / (context_total(v) + alpha * S)
// where S = vocab.num_successors(). The end marker is a predicted outcome;
// the begin marker is conditioned on but never predicted.
class BigramModel : public BigramScorer {
 public:
  // `vocab` must outlive the model. alpha must be positive.
  BigramModel(const Vocabulary& vocab, BigramCounts counts, double alpha);

  double prob(WordId prev, WordId w) const;
  double log_prob(WordId prev, WordId w) const override;

  // Log probability of one boundary-marked sentence: every position after
  // the begin marker is scored, the end marker included.
  double sentence_log_prob(std::span<const WordId> sentence) const;

  const Vocabulary& vocab() const { return *vocab_; }
  const BigramCounts& counts() const { return counts_; }
  double alpha() const { return alpha_; }

 private:
  const Vocabulary* vocab_;
  BigramCounts counts_;
  double alpha_;
};

struct PerplexityResult {
  double log_prob = 0.0;          // total corpus log probability
  std::uint64_t positions = 0;    // scored positions (end markers included)
  double perplexity = 1.0;        // exp(-log_prob / positions)
};

PerplexityResult perplexity(const BigramModel& model,
                            const EncodedCorpus& corpus);
double sentence_perplexity(const BigramModel& model,
                           const std::vector<WordId>& sentence);

// TSV serialization. Layout: a fixed signature line, an "alpha <value>"
// line, then one "prev<TAB>word<TAB>count" row per nonzero pair in
// ascending id order. Comment lines starting with '#' after the signature
// are ignored on load. Vocabulary ids are rebuilt from the derived
// frequencies, so a save/load round trip reproduces the model exactly.
// `comments` are emitted as '#' lines right after the signature.
void save_model(const BigramModel& model, std::ostream& out,
                const std::vector<std::string>& comments = {});

struct LoadedCounts {
  Vocabulary vocab;
  BigramCounts counts;
  double alpha = 0.0;
};
LoadedCounts load_model(std::istream& in);
LoadedCounts load_model_file(const std::string& path);

// Context-free adapter over a trained model's successor frequencies:
//   p(w) = (successor_count(w) + alpha) / (positions + alpha * S).
class UnigramAdapter : public BigramScorer {
 public:
  explicit UnigramAdapter(const BigramModel& model);
  double log_prob(WordId prev, WordId w) const override;

 private:
  std::vector<double> log_probs_;
};

}  // namespace prmlm

#endif  // PRMLM_NGRAM_HPP_
