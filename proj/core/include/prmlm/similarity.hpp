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

#ifndef PRMLM_SIMILARITY_HPP_
#define PRMLM_SIMILARITY_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "prmlm/types.hpp"
#include "prmlm/vocab.hpp"

namespace prmlm {

// Sparse symmetric acoustic-confusability scores over content words.
// Stored entries lie in (0, 1]; absent pairs score 0; the diagonal is
// implicitly 1. Rows are kept sorted by neighbor id.
class SimilarityMatrix {
 public:
  // `vocab` must outlive the matrix.
  explicit SimilarityMatrix(const Vocabulary& vocab);

  // Symmetric set; both ids must be content words, score in (0, 1].
  void set(WordId a, WordId b, double score);

  // 1 for a == b, stored score otherwise, 0 if absent.
  double score(WordId a, WordId b) const;

  // Off-diagonal neighbors of `w`, ascending id.
  const std::vector<std::pair<WordId, double>>& row(WordId w) const;

  std::size_t pair_count() const { return pair_count_; }
  const Vocabulary& vocab() const { return *vocab_; }

 private:
  const Vocabulary* vocab_;
  std::vector<std::vector<std::pair<WordId, double>>> rows_;
  std::size_t pair_count_ = 0;
};

std::size_t levenshtein(std::string_view a, std::string_view b);

// Spelling-based stand-in for acoustic confusability:
//   score(a, b) = exp(-(levenshtein(a, b) / max(len(a), len(b))) / temperature)
// computed over all content-word pairs; entries below `threshold` are
// omitted to keep the matrix sparse. temperature must be positive.
SimilarityMatrix proxy_similarity(const Vocabulary& vocab, double temperature,
                                  double threshold = 0.05);

struct SimilarityLoadResult {
  SimilarityMatrix matrix;
  std::size_t skipped_unknown = 0;  // rows naming out-of-vocabulary words
};

// TSV rows "word1 word2 score" (whitespace-separated); '#' lines are
// comments. If both orientations of a pair occur, the scores are averaged.
// Malformed rows and out-of-range scores raise DataError with the line
// number; rows naming unknown or reserved words are skipped and counted.
SimilarityLoadResult load_similarity(std::istream& in,
                                     const Vocabulary& vocab);
SimilarityLoadResult load_similarity_file(const std::string& path,
                                          const Vocabulary& vocab);

// Writes each stored pair once (lower id first), ascending, scores with six
// decimals. Lines starting with '#' may precede the data.
void save_similarity(const SimilarityMatrix& matrix, std::ostream& out);

// The words most confusable with `word`: neighbors ranked by descending
// score, ties broken by ascending id, truncated to nb_simil. Never contains
// `word` itself or a reserved id. nb_simil == 0 yields an empty set.
struct ConfusableSet {
  WordId word = 0;
  std::vector<std::pair<WordId, double>> neighbors;
};

ConfusableSet confusable_set(const SimilarityMatrix& matrix, WordId word,
                             std::size_t nb_simil);

// Confusable sets for every word id; reserved ids get empty sets.
std::vector<ConfusableSet> build_confusable_table(const SimilarityMatrix& matrix,
                                                  std::size_t nb_simil);

}  // namespace prmlm

#endif  // PRMLM_SIMILARITY_HPP_
