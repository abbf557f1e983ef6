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

#ifndef PRMLM_VOCAB_HPP_
#define PRMLM_VOCAB_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "prmlm/types.hpp"

namespace prmlm {

// Closed word list with three reserved entries at fixed ids:
//   0 = sentence-begin marker, 1 = sentence-end marker, 2 = unknown word.
// Content words follow, ordered by descending corpus frequency with ties
// broken lexicographically, so ids are reproducible for a given corpus.
class Vocabulary {
 public:
  static constexpr WordId kBos = 0;
  static constexpr WordId kEos = 1;
  static constexpr WordId kUnk = 2;
  static constexpr WordId kFirstContent = 3;

  static constexpr const char* kBosSurface = "<s>";
  static constexpr const char* kEosSurface = "</s>";
  static constexpr const char* kUnkSurface = "<unk>";

  // Counts whitespace-separated tokens in `lines` and keeps words occurring
  // at least max(min_count, 1) times. Tokens spelled like a reserved surface
  // are not added as content words. Throws DataError if no tokens remain.
  static Vocabulary build(const std::vector<std::string>& lines,
                          std::size_t min_count);

  // Builds a vocabulary directly from per-word frequencies (used when
  // reloading serialized models). Reserved surfaces in `freqs` are ignored.
  static Vocabulary from_frequencies(
      const std::vector<std::pair<std::string, std::uint64_t>>& freqs);

  // Id for `word`; unknown words map to kUnk.
  WordId lookup(std::string_view word) const;

  // Id for `word` only if present (reserved surfaces included).
  std::optional<WordId> find(std::string_view word) const;

  const std::string& surface(WordId id) const;

  std::size_t size() const { return words_.size(); }
  std::size_t content_size() const { return words_.size() - kFirstContent; }

  // Number of legal successor outcomes: every word plus the end marker,
  // minus the begin marker. Equals size() - 1.
  std::size_t num_successors() const { return words_.size() - 1; }

  bool is_reserved(WordId id) const { return id < kFirstContent; }
  bool is_content(WordId id) const {
    return id >= kFirstContent && id < words_.size();
  }
  bool valid(WordId id) const { return id < words_.size(); }

 private:
  Vocabulary() = default;
  void add_reserved();
  WordId add(std::string word);

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId, StringHash, std::equal_to<>> index_;
};

// ASCII-only case folding, applied by callers that opt into normalization.
std::string to_lower_ascii(std::string_view s);

// Splits on runs of spaces and tabs; never returns empty tokens.
std::vector<std::string_view> split_tokens(std::string_view line);

}  // namespace prmlm

#endif  // PRMLM_VOCAB_HPP_
