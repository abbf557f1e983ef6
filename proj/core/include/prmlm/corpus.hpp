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

#ifndef PRMLM_CORPUS_HPP_
#define PRMLM_CORPUS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "prmlm/types.hpp"
#include "prmlm/vocab.hpp"

namespace prmlm {

// Sentence-segmented corpus in id space. Every sentence is stored as
// [kBos, w1, ..., wn, kEos]; interior positions are never markers.
struct EncodedCorpus {
  std::vector<std::vector<WordId>> sentences;
  // Interior (non-marker) token count, summed over sentences.
  std::size_t token_count = 0;
};

// One sentence per line, tokens separated by spaces/tabs. Blank and
// whitespace-only lines are skipped. Out-of-vocabulary tokens and tokens
// spelled like the begin/end markers encode to kUnk.
EncodedCorpus encode_corpus(const std::vector<std::string>& lines,
                            const Vocabulary& vocab);

// Interior surfaces of one encoded sentence (markers dropped).
std::vector<std::string> decode_sentence(const std::vector<WordId>& sentence,
                                         const Vocabulary& vocab);

// Checks the [kBos, ..., kEos] shape; throws std::invalid_argument if broken.
void check_sentence(const std::vector<WordId>& sentence,
                    const Vocabulary& vocab);

// Reads all lines of a text stream / file. read_corpus_file throws DataError
// if the file cannot be opened.
std::vector<std::string> read_lines(std::istream& in);
std::vector<std::string> read_corpus_file(const std::string& path);

}  // namespace prmlm

#endif  // PRMLM_CORPUS_HPP_
