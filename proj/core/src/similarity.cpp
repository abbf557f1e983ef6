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

#include "prmlm/similarity.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "prmlm/numeric.hpp"

namespace prmlm {

SimilarityMatrix::SimilarityMatrix(const Vocabulary& vocab)
    : vocab_(&vocab), rows_(vocab.size()) {}

void SimilarityMatrix::set(WordId a, WordId b, double score) {
  if (!vocab_->is_content(a) || !vocab_->is_content(b) || a == b) {
    throw std::invalid_argument("similarity pairs join two distinct content words");
  }
  if (!(score > 0.0) || score > 1.0) {
    throw std::invalid_argument("similarity score must lie in (0, 1]");
  }
  auto insert = [&](WordId x, WordId y) {
    auto& row = rows_[x];
    auto it = std::lower_bound(
        row.begin(), row.end(), y,
        [](const auto& e, WordId id) { return e.first < id; });
    if (it != row.end() && it->first == y) {
      it->second = score;
      return false;
    }
    row.insert(it, {y, score});
    return true;
  };
  bool fresh = insert(a, b);
  insert(b, a);
  if (fresh) ++pair_count_;
}

double SimilarityMatrix::score(WordId a, WordId b) const {
  if (!vocab_->valid(a) || !vocab_->valid(b)) {
    throw std::invalid_argument("word id out of range");
  }
  if (a == b) return 1.0;
  const auto& row = rows_[a];
  auto it = std::lower_bound(
      row.begin(), row.end(), b,
      [](const auto& e, WordId id) { return e.first < id; });
  if (it != row.end() && it->first == b) return it->second;
  return 0.0;
}

const std::vector<std::pair<WordId, double>>& SimilarityMatrix::row(
    WordId w) const {
  if (!vocab_->valid(w)) throw std::invalid_argument("word id out of range");
  return rows_[w];
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

SimilarityMatrix proxy_similarity(const Vocabulary& vocab, double temperature,
                                  double threshold) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("temperature must be positive");
  }
  SimilarityMatrix matrix(vocab);
  for (WordId a = Vocabulary::kFirstContent; a < vocab.size(); ++a) {
    const std::string& sa = vocab.surface(a);
    for (WordId b = a + 1; b < vocab.size(); ++b) {
      const std::string& sb = vocab.surface(b);
      double dist = static_cast<double>(levenshtein(sa, sb));
      double norm = dist / static_cast<double>(std::max(sa.size(), sb.size()));
      double score = std::exp(-norm / temperature);
      if (score >= threshold) matrix.set(a, b, score);
    }
  }
  return matrix;
}

SimilarityLoadResult load_similarity(std::istream& in,
                                     const Vocabulary& vocab) {
  // Last value per orientation; both orientations present -> mean.
  std::map<std::pair<WordId, WordId>, double> directed;
  std::size_t skipped = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 3) {
      throw DataError("line " + std::to_string(line_no) + ": malformed row");
    }
    errno = 0;
    std::string score_str(tokens[2]);
    char* end = nullptr;
    double score = std::strtod(score_str.c_str(), &end);
    if (end != score_str.c_str() + score_str.size() || errno == ERANGE ||
        !std::isfinite(score)) {
      throw DataError("line " + std::to_string(line_no) + ": bad score '" +
                      score_str + "'");
    }
    if (!(score > 0.0) || score > 1.0) {
      throw DataError("line " + std::to_string(line_no) +
                      ": score out of range (0, 1]");
    }
    auto a = vocab.find(tokens[0]);
    auto b = vocab.find(tokens[1]);
    if (!a || !b || !vocab.is_content(*a) || !vocab.is_content(*b)) {
      ++skipped;
      continue;
    }
    if (*a == *b) continue;  // the diagonal is fixed at 1
    directed[{*a, *b}] = score;
  }

  SimilarityMatrix matrix(vocab);
  for (const auto& [key, score] : directed) {
    auto [a, b] = key;
    if (a > b) continue;  // handled from the (b, a) side below
    auto mirror = directed.find({b, a});
    double value =
        mirror == directed.end() ? score : 0.5 * (score + mirror->second);
    matrix.set(a, b, value);
  }
  for (const auto& [key, score] : directed) {
    auto [a, b] = key;
    if (a < b) continue;
    if (directed.find({b, a}) == directed.end()) matrix.set(b, a, score);
  }
  return SimilarityLoadResult{std::move(matrix), skipped};
}

SimilarityLoadResult load_similarity_file(const std::string& path,
                                          const Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open similarity file: " + path);
  return load_similarity(in, vocab);
}

void save_similarity(const SimilarityMatrix& matrix, std::ostream& out) {
  const Vocabulary& vocab = matrix.vocab();
  for (WordId a = Vocabulary::kFirstContent; a < vocab.size(); ++a) {
    for (const auto& [b, score] : matrix.row(a)) {
      if (b < a) continue;
      out << vocab.surface(a) << '\t' << vocab.surface(b) << '\t'
          << fmt_fixed(score, 6) << "\n";
    }
  }
}

ConfusableSet confusable_set(const SimilarityMatrix& matrix, WordId word,
                             std::size_t nb_simil) {
  const Vocabulary& vocab = matrix.vocab();
  if (!vocab.is_content(word)) {
    throw std::invalid_argument("confusable sets exist for content words only");
  }
  ConfusableSet set;
  set.word = word;
  set.neighbors = matrix.row(word);  // ascending id
  std::stable_sort(set.neighbors.begin(), set.neighbors.end(),
                   [](const auto& x, const auto& y) {
                     return x.second > y.second;  // ties keep ascending id
                   });
  if (set.neighbors.size() > nb_simil) set.neighbors.resize(nb_simil);
  return set;
}

std::vector<ConfusableSet> build_confusable_table(
    const SimilarityMatrix& matrix, std::size_t nb_simil) {
  const Vocabulary& vocab = matrix.vocab();
  std::vector<ConfusableSet> table(vocab.size());
  for (WordId w = 0; w < vocab.size(); ++w) {
    table[w].word = w;
    if (vocab.is_content(w)) {
      table[w] = confusable_set(matrix, w, nb_simil);
    }
  }
  return table;
}

}  // namespace prmlm
