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

#ifndef PRMLM_CLUSTER_HPP_
#define PRMLM_CLUSTER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prmlm/corpus.hpp"
#include "prmlm/ngram.hpp"
#include "prmlm/scorer.hpp"
#include "prmlm/similarity.hpp"
#include "prmlm/types.hpp"

namespace prmlm {

// Word-to-class assignment. Content words occupy classes [0, num_classes);
// the begin/end/unknown markers sit in dedicated singleton classes
// num_classes, num_classes + 1, num_classes + 2 and never move.
struct ClassMap {
  std::vector<ClassId> assignment;  // indexed by word id
  std::size_t num_classes = 0;      // content classes only

  ClassId bos_class() const { return static_cast<ClassId>(num_classes); }
  ClassId eos_class() const { return static_cast<ClassId>(num_classes + 1); }
  ClassId unk_class() const { return static_cast<ClassId>(num_classes + 2); }
  std::size_t total_classes() const { return num_classes + 3; }

  // Initial assignment: content words by descending frequency (ties by
  // ascending id), word at rank r starts in class r mod num_classes.
  static ClassMap initial(const Vocabulary& vocab, const BigramCounts& counts,
                          std::size_t num_classes);
};

// Two-factor class model: p(w | v) = p(class(w) | class(v)) * p(w | class(w)),
// both factors additively smoothed with the same alpha. Transition
// normalization excludes the begin-marker class as a successor; emission
// normalizes over the class's members.
class ClassBigramModel : public BigramScorer {
 public:
  // `vocab` must outlive the model; counts are word-level bigram counts.
  ClassBigramModel(const Vocabulary& vocab, const BigramCounts& counts,
                   ClassMap classes, double alpha);

  double trans_prob(ClassId from, ClassId to) const;
  double emit_prob(WordId w) const;
  double log_prob(WordId prev, WordId w) const override;

  const ClassMap& classes() const { return classes_; }
  const Vocabulary& vocab() const { return *vocab_; }
  double alpha() const { return alpha_; }

 private:
  const Vocabulary* vocab_;
  ClassMap classes_;
  double alpha_;
  std::size_t num_total_;
  std::vector<std::uint64_t> trans_;       // dense num_total_^2, row-major
  std::vector<std::uint64_t> trans_row_;
  std::vector<std::uint64_t> emit_word_;   // successor counts per word
  std::vector<std::uint64_t> emit_class_;
  std::vector<std::uint32_t> class_size_;
};

enum class ObjectiveKind { kLikelihood, kPrmDerived };

// Training criterion evaluated on the clustering corpus. kLikelihood is the
// corpus log probability under the class model. kPrmDerived additionally
// penalizes, at each position, the mean log probability the model grants to
// the confusable alternatives of the current word (as successor of the
// previous word) and of the previous word (as context for the current one);
// with every confusable set empty it equals the likelihood. `offset` is
// added to every evaluation and must not change the argmax.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::kLikelihood;
  const SimilarityMatrix* sim = nullptr;  // required for kPrmDerived
  std::size_t nb_simil = 0;
  double offset = 0.0;
};

// Direct evaluation by a full corpus scan (the reference the incremental
// bookkeeping in exchange_cluster is tested against).
double objective_value(const ClassBigramModel& model,
                       const EncodedCorpus& corpus, const Objective& objective);

struct ExchangeOptions {
  std::size_t num_classes = 2;
  double alpha = 0.5;
  std::size_t max_passes = 20;
  std::uint64_t seed = 42;  // reserved; the algorithm itself is deterministic
};

struct ExchangeResult {
  ClassMap classes;
  double final_objective = 0.0;
  std::size_t passes = 0;
  std::size_t moves = 0;
  std::vector<double> pass_objectives;  // objective after each pass
  std::vector<double> move_objectives;  // objective after each accepted move
};

// Exchange clustering: repeatedly offers every content word (descending
// frequency order) to every class and accepts the best strictly improving
// move (threshold 1e-12; ties prefer the lowest class id). Terminates after
// a pass with no accepted move or after max_passes.
ExchangeResult exchange_cluster(const EncodedCorpus& corpus,
                                const Vocabulary& vocab,
                                const Objective& objective,
                                const ExchangeOptions& options);

}  // namespace prmlm

#endif  // PRMLM_CLUSTER_HPP_
