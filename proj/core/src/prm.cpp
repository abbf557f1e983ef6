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

#include "prmlm/prm.hpp"

#include <cmath>
#include <stdexcept>

#include "prmlm/numeric.hpp"

namespace prmlm {

namespace {

// Mean over the confusable set of log [p(a|prev) ...] style terms.
// Returns 0 for an empty set.
double mean_alt_log_as_successor(const BigramScorer& model,
                                 const ConfusableSet& set, WordId prev) {
  if (set.neighbors.empty()) return 0.0;
  KahanSum sum;
  for (const auto& [alt, score] : set.neighbors) {
    sum.add(model.log_prob(prev, alt));
  }
  return sum.value() / static_cast<double>(set.neighbors.size());
}

double mean_alt_log_as_context(const BigramScorer& model,
                               const ConfusableSet& set, WordId next) {
  if (set.neighbors.empty()) return 0.0;
  KahanSum sum;
  for (const auto& [alt, score] : set.neighbors) {
    sum.add(model.log_prob(alt, next));
  }
  return sum.value() / static_cast<double>(set.neighbors.size());
}

double mean_log_sim(const ConfusableSet& set) {
  if (set.neighbors.empty()) return 0.0;
  KahanSum sum;
  for (const auto& [alt, score] : set.neighbors) sum.add(std::log(score));
  return sum.value() / static_cast<double>(set.neighbors.size());
}

void check_interior(std::span<const WordId> sentence, std::size_t i) {
  if (sentence.size() < 3 || i == 0 || i + 1 >= sentence.size()) {
    throw std::invalid_argument("position must be interior to the sentence");
  }
}

PrmScore score_direct(const BigramScorer& model,
                      std::span<const WordId> sentence,
                      const std::vector<ConfusableSet>& table,
                      bool keep_breakdown) {
  PrmScore score;
  KahanSum total;
  for (std::size_t i = 1; i + 1 < sentence.size(); ++i) {
    const ConfusableSet& set = table[sentence[i]];
    double factor = 0.0;
    if (!set.neighbors.empty()) {
      WordId prev = sentence[i - 1];
      WordId w = sentence[i];
      WordId next = sentence[i + 1];
      KahanSum sum;
      for (const auto& [alt, s] : set.neighbors) {
        sum.add(model.log_prob(prev, w) + model.log_prob(w, next) -
                model.log_prob(prev, alt) - model.log_prob(alt, next) +
                std::log(s));
      }
      factor = sum.value() / static_cast<double>(set.neighbors.size());
    }
    total.add(factor);
    ++score.positions_scored;
    if (keep_breakdown) score.per_position.push_back(factor);
  }
  score.log_value = total.value();
  return score;
}

// Same quantity with the right-context ratio of position i bookkept as a
// previous-word factor at position i + 1 (the end marker included). For the
// breakdown, the end-marker's incoming factor folds into the last interior
// position so the entries still sum to log_value.
PrmScore score_regrouped(const BigramScorer& model,
                         std::span<const WordId> sentence,
                         const std::vector<ConfusableSet>& table,
                         bool keep_breakdown) {
  PrmScore score;
  std::size_t interior = sentence.size() - 2;
  score.positions_scored = interior;
  if (keep_breakdown) score.per_position.assign(interior, 0.0);
  KahanSum total;
  for (std::size_t j = 1; j < sentence.size(); ++j) {
    WordId w = sentence[j];
    WordId prev = sentence[j - 1];
    double factor = 0.0;
    if (j + 1 < sentence.size()) {
      const ConfusableSet& set = table[w];
      if (!set.neighbors.empty()) {
        factor += model.log_prob(prev, w) + mean_log_sim(set) -
                  mean_alt_log_as_successor(model, set, prev);
      }
    }
    if (j >= 2) {
      const ConfusableSet& prev_set = table[prev];
      if (!prev_set.neighbors.empty()) {
        factor += model.log_prob(prev, w) -
                  mean_alt_log_as_context(model, prev_set, w);
      }
    }
    total.add(factor);
    if (keep_breakdown && interior > 0) {
      std::size_t slot = (j + 1 < sentence.size()) ? j - 1 : interior - 1;
      score.per_position[slot] += factor;
    }
  }
  score.log_value = total.value();
  return score;
}

}  // namespace

double substitution_ratio(const BigramScorer& model,
                          const SimilarityMatrix& sim, WordId prev,
                          WordId correct, WordId next, WordId alt) {
  if (alt == correct) {
    throw std::invalid_argument("alternative equals the correct word");
  }
  double s = sim.score(correct, alt);
  if (s <= 0.0) {
    throw DataError("words are not a confusable pair; the ratio is undefined");
  }
  return model.log_prob(prev, correct) + model.log_prob(correct, next) -
         model.log_prob(prev, alt) - model.log_prob(alt, next) + std::log(s);
}

double position_factor(const BigramScorer& model, const SimilarityMatrix& sim,
                       std::span<const WordId> sentence, std::size_t i,
                       std::size_t nb_simil) {
  check_interior(sentence, i);
  const Vocabulary& vocab = sim.vocab();
  WordId w = sentence[i];
  if (!vocab.is_content(w)) return 0.0;  // unknowns have no confusables
  ConfusableSet set = confusable_set(sim, w, nb_simil);
  if (set.neighbors.empty()) return 0.0;
  KahanSum sum;
  for (const auto& [alt, score] : set.neighbors) {
    sum.add(substitution_ratio(model, sim, sentence[i - 1], w, sentence[i + 1],
                               alt));
  }
  return sum.value() / static_cast<double>(set.neighbors.size());
}

PrmScore prm_score_sentence(const BigramScorer& model,
                            const SimilarityMatrix& sim,
                            std::span<const WordId> sentence,
                            const PrmConfig& config) {
  if (config.nb_simil == 0) {
    throw std::invalid_argument(
        "nb_simil = 0 degenerates to perplexity; use the perplexity path");
  }
  auto table = build_confusable_table(sim, config.nb_simil);
  return config.form == PrmForm::kDirect
             ? score_direct(model, sentence, table, config.keep_breakdown)
             : score_regrouped(model, sentence, table, config.keep_breakdown);
}

PrmScore prm_score(const BigramScorer& model, const SimilarityMatrix& sim,
                   const EncodedCorpus& corpus, const PrmConfig& config) {
  if (config.nb_simil == 0) {
    throw std::invalid_argument(
        "nb_simil = 0 degenerates to perplexity; use the perplexity path");
  }
  auto table = build_confusable_table(sim, config.nb_simil);
  PrmScore score;
  KahanSum total;
  for (const auto& sentence : corpus.sentences) {
    PrmScore s =
        config.form == PrmForm::kDirect
            ? score_direct(model, sentence, table, config.keep_breakdown)
            : score_regrouped(model, sentence, table, config.keep_breakdown);
    total.add(s.log_value);
    score.positions_scored += s.positions_scored;
    if (config.keep_breakdown) {
      score.per_position.insert(score.per_position.end(),
                                s.per_position.begin(), s.per_position.end());
    }
  }
  score.log_value = total.value();
  return score;
}

}  // namespace prmlm
