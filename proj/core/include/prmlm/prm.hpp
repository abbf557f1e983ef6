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

#ifndef PRMLM_PRM_HPP_
#define PRMLM_PRM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "prmlm/corpus.hpp"
#include "prmlm/scorer.hpp"
#include "prmlm/similarity.hpp"
#include "prmlm/types.hpp"

namespace prmlm {

// The probability ratio measure (PRM) asks, at every interior position of a
// text: how strongly does the model prefer the word actually spoken over
// each acoustically confusable alternative, with both words judged in the
// same two-sided context? Each alternative contributes (in log space)
//
//   log p(w|prev) + log p(next|w) - log p(a|prev) - log p(next|a) + log Sim(w, a)
//
// and a position scores the mean over its confusable set. Positions with an
// empty set contribute exactly 0. Higher is better; a model that beats every
// alternative by more than the acoustic similarity scores positive.

enum class PrmForm {
  kDirect,     // two-sided ratio evaluated per position
  kRegrouped,  // algebraically equal form that defers the right-context
               // ratio of position i to position i + 1
};

struct PrmConfig {
  std::size_t nb_simil = 1;
  PrmForm form = PrmForm::kDirect;
  bool per_word_normalize = true;  // which value reports treat as "the" measure
  bool keep_breakdown = false;
};

struct PrmScore {
  double log_value = 0.0;            // sum of per-position log factors
  std::size_t positions_scored = 0;  // interior positions, empty sets included
  std::vector<double> per_position;  // filled when keep_breakdown is set

  double per_word() const {
    return positions_scored == 0
               ? 0.0
               : log_value / static_cast<double>(positions_scored);
  }
};

// One alternative's log ratio at a position; see above. `alt` must differ
// from `correct` (std::invalid_argument) and must be a stored confusable of
// it (DataError otherwise: Sim would be 0 and the ratio undefined).
double substitution_ratio(const BigramScorer& model,
                          const SimilarityMatrix& sim, WordId prev,
                          WordId correct, WordId next, WordId alt);

// Mean substitution ratio over the position's confusable set; 0 when empty.
// `i` must index an interior position of the boundary-marked sentence.
double position_factor(const BigramScorer& model, const SimilarityMatrix& sim,
                       std::span<const WordId> sentence, std::size_t i,
                       std::size_t nb_simil);

PrmScore prm_score_sentence(const BigramScorer& model,
                            const SimilarityMatrix& sim,
                            std::span<const WordId> sentence,
                            const PrmConfig& config);

// Whole-corpus score; log_value sums sentence scores, positions accumulate.
// config.nb_simil == 0 is refused (std::invalid_argument): the measure
// degenerates to perplexity, which has its own code path.
PrmScore prm_score(const BigramScorer& model, const SimilarityMatrix& sim,
                   const EncodedCorpus& corpus, const PrmConfig& config);

}  // namespace prmlm

#endif  // PRMLM_PRM_HPP_
