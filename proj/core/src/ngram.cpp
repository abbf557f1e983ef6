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

#include "prmlm/ngram.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "prmlm/numeric.hpp"

namespace prmlm {

namespace {

constexpr const char* kModelSignature = "#prm-lm bigram v1";

double parse_double(const std::string& s, std::size_t line_no,
                    const char* what) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw DataError("line " + std::to_string(line_no) + ": bad " + what +
                    " '" + s + "'");
  }
  return v;
}

std::uint64_t parse_count(const std::string& s, std::size_t line_no) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw DataError("line " + std::to_string(line_no) + ": bad count '" + s +
                    "'");
  }
  return std::strtoull(s.c_str(), nullptr, 10);
}

}  // namespace

ExplicitUnigramScorer::ExplicitUnigramScorer(std::vector<double> probs) {
  log_probs_.resize(probs.size(), 0.0);
  for (std::size_t w = 0; w < probs.size(); ++w) {
    if (w == Vocabulary::kBos) continue;
    if (!(probs[w] > 0.0)) {
      throw std::invalid_argument("unigram probabilities must be positive");
    }
    log_probs_[w] = std::log(probs[w]);
  }
}

double ExplicitUnigramScorer::log_prob(WordId /*prev*/, WordId w) const {
  if (w >= log_probs_.size() || w == Vocabulary::kBos) {
    throw std::invalid_argument("illegal successor id");
  }
  return log_probs_[w];
}

std::vector<std::uint64_t> BigramCounts::sorted_keys() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(pairs.size());
  for (const auto& [k, c] : pairs) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  return keys;
}

BigramCounts count_bigrams(const EncodedCorpus& corpus,
                           const Vocabulary& vocab) {
  BigramCounts counts;
  counts.context_total.assign(vocab.size(), 0);
  counts.successor_count.assign(vocab.size(), 0);
  for (const auto& sentence : corpus.sentences) {
    check_sentence(sentence, vocab);
    for (std::size_t i = 1; i < sentence.size(); ++i) {
      WordId prev = sentence[i - 1];
      WordId w = sentence[i];
      ++counts.pairs[BigramCounts::key(prev, w)];
      ++counts.context_total[prev];
      ++counts.successor_count[w];
      ++counts.total_positions;
    }
  }
  return counts;
}

BigramModel::BigramModel(const Vocabulary& vocab, BigramCounts counts,
                         double alpha)
    : vocab_(&vocab), counts_(std::move(counts)), alpha_(alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (counts_.context_total.empty()) {
    counts_.context_total.assign(vocab.size(), 0);
    counts_.successor_count.assign(vocab.size(), 0);
  }
  if (counts_.context_total.size() != vocab.size() ||
      counts_.successor_count.size() != vocab.size()) {
    throw std::invalid_argument("counts do not match vocabulary size");
  }
}

double BigramModel::prob(WordId prev, WordId w) const {
  if (!vocab_->valid(prev) || !vocab_->valid(w) || w == Vocabulary::kBos ||
      prev == Vocabulary::kEos) {
    throw std::invalid_argument("illegal bigram query");
  }
  double num = static_cast<double>(counts_.pair_count(prev, w)) + alpha_;
  double den = static_cast<double>(counts_.context_total[prev]) +
               alpha_ * static_cast<double>(vocab_->num_successors());
  return num / den;
}

double BigramModel::log_prob(WordId prev, WordId w) const {
  return std::log(prob(prev, w));
}

double BigramModel::sentence_log_prob(std::span<const WordId> sentence) const {
  if (sentence.size() < 2 || sentence.front() != Vocabulary::kBos ||
      sentence.back() != Vocabulary::kEos) {
    throw std::invalid_argument("sentence must be [begin, ..., end] marked");
  }
  KahanSum sum;
  for (std::size_t i = 1; i < sentence.size(); ++i) {
    sum.add(log_prob(sentence[i - 1], sentence[i]));
  }
  return sum.value();
}

PerplexityResult perplexity(const BigramModel& model,
                            const EncodedCorpus& corpus) {
  PerplexityResult result;
  KahanSum sum;
  for (const auto& sentence : corpus.sentences) {
    sum.add(model.sentence_log_prob(sentence));
    result.positions += sentence.size() - 1;
  }
  result.log_prob = sum.value();
  result.perplexity =
      result.positions == 0
          ? 1.0
          : std::exp(-result.log_prob / static_cast<double>(result.positions));
  return result;
}

double sentence_perplexity(const BigramModel& model,
                           const std::vector<WordId>& sentence) {
  double lp = model.sentence_log_prob(sentence);
  return std::exp(-lp / static_cast<double>(sentence.size() - 1));
}

void save_model(const BigramModel& model, std::ostream& out,
                const std::vector<std::string>& comments) {
  out << kModelSignature << "\n";
  for (const auto& comment : comments) out << "# " << comment << "\n";
  out << "alpha " << fmt_exact(model.alpha()) << "\n";
  const Vocabulary& vocab = model.vocab();
  for (std::uint64_t key : model.counts().sorted_keys()) {
    WordId prev = static_cast<WordId>(key >> 32);
    WordId w = static_cast<WordId>(key & 0xffffffffu);
    out << vocab.surface(prev) << '\t' << vocab.surface(w) << '\t'
        << model.counts().pairs.at(key) << "\n";
  }
}

LoadedCounts load_model(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty model file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kModelSignature) {
    throw DataError("unrecognized model header: '" + line + "'");
  }

  double alpha = 0.0;
  bool have_alpha = false;
  struct Row {
    std::string prev, word;
    std::uint64_t count;
  };
  std::vector<Row> rows;

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!have_alpha) {
      if (tokens.size() != 2 || tokens[0] != "alpha") {
        throw DataError("line " + std::to_string(line_no) +
                        ": expected 'alpha <value>'");
      }
      alpha = parse_double(std::string(tokens[1]), line_no, "alpha");
      if (!(alpha > 0.0)) {
        throw DataError("line " + std::to_string(line_no) +
                        ": alpha must be positive");
      }
      have_alpha = true;
      continue;
    }
    if (tokens.size() != 3) {
      throw DataError("line " + std::to_string(line_no) + ": malformed row");
    }
    rows.push_back(Row{std::string(tokens[0]), std::string(tokens[1]),
                       parse_count(std::string(tokens[2]), line_no)});
  }
  if (!have_alpha) throw DataError("model file missing alpha line");

  // Word frequencies are the successor sums, so the vocabulary rebuilds
  // with the same ids the model was saved with.
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& row : rows) freq[row.word] += row.count;
  std::vector<std::pair<std::string, std::uint64_t>> freq_vec(freq.begin(),
                                                              freq.end());
  Vocabulary vocab = Vocabulary::from_frequencies(freq_vec);

  BigramCounts counts;
  counts.context_total.assign(vocab.size(), 0);
  counts.successor_count.assign(vocab.size(), 0);
  for (const auto& row : rows) {
    auto prev = vocab.find(row.prev);
    auto w = vocab.find(row.word);
    if (!prev) throw DataError("model row names unknown context '" + row.prev + "'");
    if (!w) throw DataError("model row names unknown word '" + row.word + "'");
    if (*w == Vocabulary::kBos || *prev == Vocabulary::kEos) {
      throw DataError("model row uses a marker in an illegal role");
    }
    counts.pairs[BigramCounts::key(*prev, *w)] += row.count;
    counts.context_total[*prev] += row.count;
    counts.successor_count[*w] += row.count;
    counts.total_positions += row.count;
  }
  return LoadedCounts{std::move(vocab), std::move(counts), alpha};
}

LoadedCounts load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model file: " + path);
  return load_model(in);
}

UnigramAdapter::UnigramAdapter(const BigramModel& model) {
  const Vocabulary& vocab = model.vocab();
  const BigramCounts& counts = model.counts();
  double den = static_cast<double>(counts.total_positions) +
               model.alpha() * static_cast<double>(vocab.num_successors());
  log_probs_.resize(vocab.size(), 0.0);
  for (WordId w = 0; w < vocab.size(); ++w) {
    if (w == Vocabulary::kBos) continue;
    double num = static_cast<double>(counts.successor_count[w]) + model.alpha();
    log_probs_[w] = std::log(num / den);
  }
}

double UnigramAdapter::log_prob(WordId /*prev*/, WordId w) const {
  if (w >= log_probs_.size() || w == Vocabulary::kBos) {
    throw std::invalid_argument("illegal successor id");
  }
  return log_probs_[w];
}

}  // namespace prmlm
