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

#include "prmlm/corpus.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace prmlm {

EncodedCorpus encode_corpus(const std::vector<std::string>& lines,
                            const Vocabulary& vocab) {
  EncodedCorpus corpus;
  for (const auto& line : lines) {
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    std::vector<WordId> sentence;
    sentence.reserve(tokens.size() + 2);
    sentence.push_back(Vocabulary::kBos);
    for (std::string_view tok : tokens) {
      WordId id = vocab.lookup(tok);
      // Marker surfaces in running text carry no position of their own;
      // treat them like any other out-of-vocabulary token.
      if (id == Vocabulary::kBos || id == Vocabulary::kEos) {
        id = Vocabulary::kUnk;
      }
      sentence.push_back(id);
    }
    sentence.push_back(Vocabulary::kEos);
    corpus.token_count += sentence.size() - 2;
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

std::vector<std::string> decode_sentence(const std::vector<WordId>& sentence,
                                         const Vocabulary& vocab) {
  check_sentence(sentence, vocab);
  std::vector<std::string> out;
  out.reserve(sentence.size() - 2);
  for (std::size_t i = 1; i + 1 < sentence.size(); ++i) {
    out.push_back(vocab.surface(sentence[i]));
  }
  return out;
}

void check_sentence(const std::vector<WordId>& sentence,
                    const Vocabulary& vocab) {
  if (sentence.size() < 2 || sentence.front() != Vocabulary::kBos ||
      sentence.back() != Vocabulary::kEos) {
    throw std::invalid_argument("sentence must be [begin, ..., end] marked");
  }
  for (std::size_t i = 1; i + 1 < sentence.size(); ++i) {
    WordId id = sentence[i];
    if (!vocab.valid(id) || id == Vocabulary::kBos || id == Vocabulary::kEos) {
      throw std::invalid_argument("interior sentence position holds a marker");
    }
  }
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path);
  return read_lines(in);
}

}  // namespace prmlm
