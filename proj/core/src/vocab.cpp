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

#include "prmlm/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace prmlm {

namespace {

bool is_reserved_surface(std::string_view s) {
  return s == Vocabulary::kBosSurface || s == Vocabulary::kEosSurface ||
         s == Vocabulary::kUnkSurface;
}

}  // namespace

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

void Vocabulary::add_reserved() {
  add(kBosSurface);
  add(kEosSurface);
  add(kUnkSurface);
}

WordId Vocabulary::add(std::string word) {
  WordId id = static_cast<WordId>(words_.size());
  index_.emplace(word, id);
  words_.push_back(std::move(word));
  return id;
}

Vocabulary Vocabulary::build(const std::vector<std::string>& lines,
                             std::size_t min_count) {
  std::unordered_map<std::string, std::uint64_t> freq;
  std::uint64_t total = 0;
  for (const auto& line : lines) {
    for (std::string_view tok : split_tokens(line)) {
      if (is_reserved_surface(tok)) continue;
      ++freq[std::string(tok)];
      ++total;
    }
  }
  if (total == 0) throw DataError("empty corpus: no tokens found");

  std::vector<std::pair<std::string, std::uint64_t>> items(freq.begin(),
                                                           freq.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocabulary v;
  v.add_reserved();
  std::size_t cutoff = std::max<std::size_t>(min_count, 1);
  for (auto& [word, count] : items) {
    if (count < cutoff) break;  // items are sorted by count
    v.add(std::move(word));
  }
  if (v.content_size() == 0) {
    throw DataError("empty vocabulary: min-count removed every word");
  }
  return v;
}

Vocabulary Vocabulary::from_frequencies(
    const std::vector<std::pair<std::string, std::uint64_t>>& freqs) {
  std::vector<std::pair<std::string, std::uint64_t>> items;
  items.reserve(freqs.size());
  for (const auto& e : freqs) {
    if (!is_reserved_surface(e.first)) items.push_back(e);
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocabulary v;
  v.add_reserved();
  for (auto& [word, count] : items) v.add(std::move(word));
  return v;
}

WordId Vocabulary::lookup(std::string_view word) const {
  auto it = index_.find(word);
  return it == index_.end() ? kUnk : it->second;
}

std::optional<WordId> Vocabulary::find(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocabulary::surface(WordId id) const {
  if (!valid(id)) throw std::invalid_argument("word id out of range");
  return words_[id];
}

}  // namespace prmlm
