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

// Expected values were computed with an independent script from the ratio
// definition and frozen here. The fixture mirrors a four-word kitchen
// vocabulary: bar/are are confusable, cookie/dinner mildly so.

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "prmlm/corpus.hpp"
#include "prmlm/ngram.hpp"
#include "prmlm/prm.hpp"
#include "prmlm/rng.hpp"
#include "prmlm/scorer.hpp"
#include "prmlm/similarity.hpp"
#include "prmlm/vocab.hpp"

using namespace prmlm;

namespace {

struct KitchenFixture {
  std::vector<std::string> lines = {"bar cookie", "are dinner", "bar dinner",
                                    "cookie are"};
  Vocabulary vocab;
  EncodedCorpus corpus;
  BigramModel model;
  SimilarityMatrix sim;
  WordId are, bar, cookie, dinner;

  KitchenFixture()
      : vocab(Vocabulary::build(lines, 1)),
        corpus(encode_corpus(lines, vocab)),
        model(vocab, count_bigrams(corpus, vocab), 0.5),
        sim(vocab),
        are(vocab.lookup("are")),
        bar(vocab.lookup("bar")),
        cookie(vocab.lookup("cookie")),
        dinner(vocab.lookup("dinner")) {
    sim.set(bar, are, 0.9);
    sim.set(bar, dinner, 0.2);
    sim.set(cookie, dinner, 0.4);
  }
};

PrmConfig config_of(std::size_t nb, PrmForm form) {
  PrmConfig config;
  config.nb_simil = nb;
  config.form = form;
  return config;
}

}  // namespace

TEST_CASE("substitution ratio, frozen") {
  KitchenFixture f;
  double r = substitution_ratio(f.model, f.sim, Vocabulary::kBos, f.bar,
                                f.cookie, f.are);
  CHECK(r == doctest::Approx(1.504077396776274).epsilon(1e-14));
  CHECK(std::exp(r) == doctest::Approx(4.5).epsilon(1e-12));

  CHECK_THROWS_AS(substitution_ratio(f.model, f.sim, Vocabulary::kBos, f.bar,
                                     f.cookie, f.bar),
                  std::invalid_argument);
  // are and cookie share no similarity entry.
  CHECK_THROWS_AS(substitution_ratio(f.model, f.sim, Vocabulary::kBos, f.are,
                                     f.dinner, f.cookie),
                  DataError);
}

TEST_CASE("position factor averages over the confusable set, frozen") {
  KitchenFixture f;
  EncodedCorpus one = encode_corpus({"bar cookie"}, f.vocab);
  const auto& sent = one.sentences[0];

  // nb 1: only are competes with bar.
  CHECK(position_factor(f.model, f.sim, sent, 1, 1) ==
        doctest::Approx(1.504077396776274).epsilon(1e-14));
  // nb 2: dinner joins at similarity 0.2.
  CHECK(position_factor(f.model, f.sim, sent, 1, 2) ==
        doctest::Approx(1.3013448427221919).epsilon(1e-14));
  // cookie's only neighbor is dinner.
  CHECK(position_factor(f.model, f.sim, sent, 2, 1) ==
        doctest::Approx(-1.4271163556401458).epsilon(1e-14));
  CHECK(std::exp(position_factor(f.model, f.sim, sent, 2, 1)) ==
        doctest::Approx(0.24).epsilon(1e-12));
}

TEST_CASE("sentence score sums position factors, frozen") {
  KitchenFixture f;
  EncodedCorpus one = encode_corpus({"bar cookie"}, f.vocab);
  for (PrmForm form : {PrmForm::kDirect, PrmForm::kRegrouped}) {
    PrmScore score =
        prm_score_sentence(f.model, f.sim, one.sentences[0], config_of(1, form));
    CHECK(score.positions_scored == 2);
    CHECK(score.log_value ==
          doctest::Approx(0.07696104113612812).epsilon(1e-12));
    CHECK(score.per_word() ==
          doctest::Approx(0.03848052056806406).epsilon(1e-12));
  }
}

TEST_CASE("a plain probability table can stand in for the model") {
  KitchenFixture f;
  // are, bar, cookie, dinner get 0.4/0.3/0.2/0.1; the end marker 0.5.
  // Unqueried slots still need positive entries.
  std::vector<double> probs(f.vocab.size(), 0.05);
  probs[Vocabulary::kEos] = 0.5;
  probs[f.are] = 0.4;
  probs[f.bar] = 0.3;
  probs[f.cookie] = 0.2;
  probs[f.dinner] = 0.1;
  ExplicitUnigramScorer table(probs);

  EncodedCorpus one = encode_corpus({"bar"}, f.vocab);
  PrmScore score = prm_score_sentence(table, f.sim, one.sentences[0],
                                      config_of(1, PrmForm::kDirect));
  CHECK(score.positions_scored == 1);
  // (0.3/0.4) * 0.9 = 0.675; context terms cancel.
  CHECK(score.log_value ==
        doctest::Approx(-0.3930425881096073).epsilon(1e-12));
}

TEST_CASE("empty confusable sets contribute nothing but are counted") {
  KitchenFixture f;
  SimilarityMatrix empty(f.vocab);
  EncodedCorpus one = encode_corpus({"bar cookie"}, f.vocab);
  PrmScore score = prm_score_sentence(f.model, empty, one.sentences[0],
                                      config_of(3, PrmForm::kDirect));
  CHECK(score.positions_scored == 2);
  CHECK(score.log_value == 0.0);
}

TEST_CASE("unknown positions score zero and still count") {
  KitchenFixture f;
  EncodedCorpus one = encode_corpus({"bar zzz"}, f.vocab);
  REQUIRE(one.sentences[0][2] == Vocabulary::kUnk);
  PrmScore direct = prm_score_sentence(f.model, f.sim, one.sentences[0],
                                       config_of(1, PrmForm::kDirect));
  CHECK(direct.positions_scored == 2);
  // The bar position is scored; the unknown position adds zero.
  double bar_alone = position_factor(f.model, f.sim, one.sentences[0], 1, 1);
  CHECK(direct.log_value == doctest::Approx(bar_alone).epsilon(1e-12));
}

TEST_CASE("a size-zero set is refused; that is the other measure") {
  KitchenFixture f;
  CHECK_THROWS_AS(
      prm_score(f.model, f.sim, f.corpus, config_of(0, PrmForm::kDirect)),
      std::invalid_argument);
}

TEST_CASE("uniform model scores zero whatever the similarity says") {
  KitchenFixture f;
  BigramModel uniform(f.vocab, BigramCounts{}, 0.5);
  PrmScore score = prm_score(uniform, f.sim, f.corpus,
                             config_of(2, PrmForm::kDirect));
  // Identical probabilities cancel exactly; only similarity terms remain,
  // and those are negative, so the value sits at the similarity mass.
  double sim_mass = 0.0;
  auto table = build_confusable_table(f.sim, 2);
  for (const auto& sentence : f.corpus.sentences) {
    for (std::size_t i = 1; i + 1 < sentence.size(); ++i) {
      const auto& nb = table[sentence[i]].neighbors;
      if (nb.empty()) continue;
      double m = 0.0;
      for (auto [id, s] : nb) m += std::log(s);
      sim_mass += m / static_cast<double>(nb.size());
    }
  }
  CHECK(score.log_value == doctest::Approx(sim_mass).epsilon(1e-12));

  // With all similarities at one the measure vanishes identically.
  SimilarityMatrix ones(f.vocab);
  ones.set(f.bar, f.are, 1.0);
  ones.set(f.cookie, f.dinner, 1.0);
  PrmScore zero = prm_score(uniform, ones, f.corpus,
                            config_of(2, PrmForm::kDirect));
  CHECK(zero.log_value == 0.0);
}

TEST_CASE("scaling every similarity shifts the score by a known amount") {
  KitchenFixture f;
  const double c = 0.5;
  SimilarityMatrix scaled(f.vocab);
  scaled.set(f.bar, f.are, 0.9 * c);
  scaled.set(f.bar, f.dinner, 0.2 * c);
  scaled.set(f.cookie, f.dinner, 0.4 * c);

  for (PrmForm form : {PrmForm::kDirect, PrmForm::kRegrouped}) {
    PrmScore base = prm_score(f.model, f.sim, f.corpus, config_of(2, form));
    PrmScore shifted = prm_score(f.model, scaled, f.corpus, config_of(2, form));
    // Every scored position with a nonempty set gains log c; here that is
    // all eight interior positions.
    CHECK(shifted.log_value ==
          doctest::Approx(base.log_value + 8 * std::log(c)).epsilon(1e-12));
  }
}

TEST_CASE("raising the true word's probability raises the measure") {
  KitchenFixture f;
  // Add mass to (<s>, bar): the bar-after-start factor must grow.
  BigramCounts boosted = f.model.counts();
  boosted.pairs[BigramCounts::key(Vocabulary::kBos, f.bar)] += 4;
  boosted.context_total[Vocabulary::kBos] += 4;
  boosted.successor_count[f.bar] += 4;
  boosted.total_positions += 4;
  BigramModel better(f.vocab, boosted, 0.5);

  EncodedCorpus one = encode_corpus({"bar cookie"}, f.vocab);
  PrmScore before = prm_score_sentence(f.model, f.sim, one.sentences[0],
                                       config_of(1, PrmForm::kDirect));
  PrmScore after = prm_score_sentence(better, f.sim, one.sentences[0],
                                      config_of(1, PrmForm::kDirect));
  CHECK(after.log_value > before.log_value);
}

TEST_CASE("breakdown entries sum to the total in both forms") {
  KitchenFixture f;
  PrmConfig config = config_of(2, PrmForm::kDirect);
  config.keep_breakdown = true;
  for (PrmForm form : {PrmForm::kDirect, PrmForm::kRegrouped}) {
    config.form = form;
    PrmScore score = prm_score(f.model, f.sim, f.corpus, config);
    REQUIRE(score.per_position.size() == score.positions_scored);
    double sum = 0.0;
    for (double v : score.per_position) sum += v;
    CHECK(sum == doctest::Approx(score.log_value).epsilon(1e-12));
  }
}

TEST_CASE("the two forms agree on random corpora") {
  Splitmix64 rng(20260419);
  std::vector<std::string> words = {"bale", "gale", "male", "pale", "tale",
                                    "bend", "fend", "lend", "mend", "tend"};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::string> lines;
    std::size_t n = 2 + rng.next_index(6);
    for (std::size_t s = 0; s < n; ++s) {
      std::string line;
      std::size_t len = 1 + rng.next_index(9);
      for (std::size_t i = 0; i < len; ++i) {
        if (i) line += ' ';
        line += words[rng.next_index(words.size())];
      }
      lines.push_back(line);
    }
    Vocabulary vocab = Vocabulary::build(lines, 1);
    EncodedCorpus corpus = encode_corpus(lines, vocab);
    BigramModel model(vocab, count_bigrams(corpus, vocab),
                      0.1 + rng.next_double());
    SimilarityMatrix sim = proxy_similarity(vocab, 0.25);
    std::size_t nb = 1 + rng.next_index(4);

    PrmScore direct =
        prm_score(model, sim, corpus, config_of(nb, PrmForm::kDirect));
    PrmScore regrouped =
        prm_score(model, sim, corpus, config_of(nb, PrmForm::kRegrouped));
    CHECK(direct.positions_scored == regrouped.positions_scored);
    CHECK(std::abs(direct.log_value - regrouped.log_value) <
          1e-9 * static_cast<double>(direct.positions_scored + 1));
  }
}
