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

#ifndef PRMLM_SCORER_HPP_
#define PRMLM_SCORER_HPP_

#include <vector>

#include "prmlm/types.hpp"

namespace prmlm {

// Contextual log probability source. Implementations must normalize over
// legal successors for every context: sum_w exp(log_prob(prev, w)) == 1,
// where w ranges over every word except the begin marker.
class BigramScorer {
 public:
  virtual ~BigramScorer() = default;
  virtual double log_prob(WordId prev, WordId w) const = 0;
};

// Fixed per-word distribution that ignores the context. Useful for scoring
// with hand-specified probabilities and for context-free decoding.
class ExplicitUnigramScorer : public BigramScorer {
 public:
  // probs[w] is p(w) for every word id; entries must be positive for legal
  // successors. The begin-marker entry is ignored.
  explicit ExplicitUnigramScorer(std::vector<double> probs);

  double log_prob(WordId prev, WordId w) const override;

 private:
  std::vector<double> log_probs_;
};

}  // namespace prmlm

#endif  // PRMLM_SCORER_HPP_
