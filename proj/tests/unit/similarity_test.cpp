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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "prmlm/similarity.hpp"
#include "prmlm/vocab.hpp"

using namespace prmlm;

TEST_CASE("edit distance ground truths") {
  CHECK(levenshtein("bar", "are") == 2);
  CHECK(levenshtein("kitten", "sitting") == 3);
  CHECK(levenshtein("abc", "abc") == 0);
  CHECK(levenshtein("", "abc") == 3);
  CHECK(levenshtein("abc", "") == 3);
  CHECK(levenshtein("", "") == 0);
  CHECK(levenshtein("a", "b") == 1);
}

TEST_CASE("matrix stores symmetric scores with an implicit diagonal") {
  Vocabulary vocab = Vocabulary::build({"bar are cookie dinner"}, 1);
  SimilarityMatrix sim(vocab);
  WordId bar = vocab.lookup("bar"), are = vocab.lookup("are");
  WordId cookie = vocab.lookup("cookie");

  CHECK(sim.score(bar, bar) == 1.0);
  CHECK(sim.score(bar, are) == 0.0);
  sim.set(bar, are, 0.9);
  CHECK(sim.score(bar, are) == 0.9);
  CHECK(sim.score(are, bar) == 0.9);
  CHECK(sim.pair_count() == 1);
  sim.set(are, bar, 0.8);  // overwrite through either orientation
  CHECK(sim.score(bar, are) == 0.8);
  CHECK(sim.pair_count() == 1);
  CHECK(sim.score(bar, cookie) == 0.0);

  CHECK_THROWS_AS(sim.set(bar, bar, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(sim.set(bar, are, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sim.set(bar, are, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(sim.set(Vocabulary::kBos, are, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(sim.set(Vocabulary::kUnk, are, 0.5), std::invalid_argument);
}

TEST_CASE("rows come back sorted by id") {
  Vocabulary vocab = Vocabulary::build({"a b c d e"}, 1);
  SimilarityMatrix sim(vocab);
  sim.set(vocab.lookup("a"), vocab.lookup("e"), 0.2);
  sim.set(vocab.lookup("a"), vocab.lookup("b"), 0.4);
  sim.set(vocab.lookup("a"), vocab.lookup("d"), 0.6);
  auto row = sim.row(vocab.lookup("a"));
  REQUIRE(row.size() == 3);
  CHECK(row[0].first < row[1].first);
  CHECK(row[1].first < row[2].first);
}

TEST_CASE("spelling proxy matches the closed form and prunes small scores") {
  Vocabulary vocab = Vocabulary::build({"bar are cookie"}, 1);
  SimilarityMatrix sim = proxy_similarity(vocab, 0.5);
  WordId bar = vocab.lookup("bar"), are = vocab.lookup("are");
  WordId cookie = vocab.lookup("cookie");

  CHECK(sim.score(bar, are) ==
        doctest::Approx(0.26359713811572677).epsilon(1e-15));
  // bar -> cookie: distance 6 over length 6 -> exp(-2) stays above the cut.
  CHECK(sim.score(bar, cookie) ==
        doctest::Approx(0.1353352832366127).epsilon(1e-15));

  // A colder temperature pushes every pair here under the cut.
  SimilarityMatrix cold = proxy_similarity(vocab, 0.1);
  CHECK(cold.score(bar, cookie) == 0.0);
  CHECK(cold.score(bar, are) == 0.0);
  CHECK(cold.pair_count() == 0);
}

TEST_CASE("proxy scores never exceed one and are symmetric") {
  Vocabulary vocab =
      Vocabulary::build({"bale gale male pale tale bend fend lend"}, 1);
  SimilarityMatrix sim = proxy_similarity(vocab, 0.25);
  for (WordId a = Vocabulary::kFirstContent; a < vocab.size(); ++a) {
    for (WordId b = Vocabulary::kFirstContent; b < vocab.size(); ++b) {
      double s = sim.score(a, b);
      CHECK(s <= 1.0);
      CHECK(s == sim.score(b, a));
      if (a == b) CHECK(s == 1.0);
    }
  }
  // One substitution in four letters at temperature 0.25: exp(-1).
  CHECK(sim.score(vocab.lookup("bale"), vocab.lookup("gale")) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-15));
  // Cross-family words differ in at least two letters: exp(-2) < 0.05 cut.
  CHECK(sim.score(vocab.lookup("bale"), vocab.lookup("bend")) == 0.0);
}

TEST_CASE("confusable sets rank by score, ties by id, truncated") {
  Vocabulary vocab = Vocabulary::build({"a b c d e"}, 1);
  SimilarityMatrix sim(vocab);
  WordId a = vocab.lookup("a");
  sim.set(a, vocab.lookup("b"), 0.5);
  sim.set(a, vocab.lookup("c"), 0.9);
  sim.set(a, vocab.lookup("d"), 0.5);
  sim.set(a, vocab.lookup("e"), 0.1);

  ConfusableSet set = confusable_set(sim, a, 3);
  REQUIRE(set.neighbors.size() == 3);
  CHECK(set.neighbors[0].first == vocab.lookup("c"));
  // Equal scores keep ascending id order: b before d.
  CHECK(set.neighbors[1].first == vocab.lookup("b"));
  CHECK(set.neighbors[2].first == vocab.lookup("d"));

  CHECK(confusable_set(sim, a, 0).neighbors.empty());
  CHECK(confusable_set(sim, a, 100).neighbors.size() == 4);
  CHECK(confusable_set(sim, vocab.lookup("e"), 2).neighbors.size() == 1);
  // Direct marker queries are caller bugs; the id-indexed table built by
  // build_confusable_table is the lenient path and leaves them empty.
  CHECK_THROWS_AS(confusable_set(sim, Vocabulary::kUnk, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(confusable_set(sim, Vocabulary::kBos, 5),
                  std::invalid_argument);
}

TEST_CASE("confusable sets grow monotonically with the size cap") {
  Vocabulary vocab = Vocabulary::build({"bale gale male pale tale"}, 1);
  SimilarityMatrix sim = proxy_similarity(vocab, 0.25);
  auto prev = confusable_set(sim, vocab.lookup("bale"), 0);
  for (std::size_t k = 1; k <= 6; ++k) {
    auto cur = confusable_set(sim, vocab.lookup("bale"), k);
    REQUIRE(cur.neighbors.size() >= prev.neighbors.size());
    // Larger caps extend the list without reordering the front.
    for (std::size_t i = 0; i < prev.neighbors.size(); ++i) {
      CHECK(cur.neighbors[i] == prev.neighbors[i]);
    }
    prev = cur;
  }
  CHECK(prev.neighbors.size() == 4);
}

TEST_CASE("table covers every id, markers empty") {
  Vocabulary vocab = Vocabulary::build({"bale gale male"}, 1);
  SimilarityMatrix sim = proxy_similarity(vocab, 0.25);
  auto table = build_confusable_table(sim, 2);
  REQUIRE(table.size() == vocab.size());
  CHECK(table[Vocabulary::kBos].neighbors.empty());
  CHECK(table[Vocabulary::kEos].neighbors.empty());
  CHECK(table[Vocabulary::kUnk].neighbors.empty());
  CHECK(table[vocab.lookup("bale")].neighbors.size() == 2);
}

TEST_CASE("similarity files round-trip") {
  Vocabulary vocab = Vocabulary::build({"bar are cookie dinner"}, 1);
  SimilarityMatrix sim(vocab);
  sim.set(vocab.lookup("bar"), vocab.lookup("are"), 0.9);
  sim.set(vocab.lookup("cookie"), vocab.lookup("dinner"), 0.4);

  std::ostringstream out;
  save_similarity(sim, out);
  std::istringstream in(out.str());
  SimilarityLoadResult loaded = load_similarity(in, vocab);
  CHECK(loaded.skipped_unknown == 0);
  CHECK(loaded.matrix.pair_count() == 2);
  CHECK(loaded.matrix.score(vocab.lookup("bar"), vocab.lookup("are")) ==
        doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("loading averages both orientations and skips unknown words") {
  Vocabulary vocab = Vocabulary::build({"bar are"}, 1);
  std::istringstream in(
      "# comment\n"
      "bar\tare\t0.8\n"
      "are\tbar\t0.6\n"
      "bar\tzzz\t0.5\n"
      "<s>\tbar\t0.5\n");
  SimilarityLoadResult loaded = load_similarity(in, vocab);
  CHECK(loaded.matrix.score(vocab.lookup("bar"), vocab.lookup("are")) ==
        doctest::Approx(0.7).epsilon(1e-12));
  CHECK(loaded.skipped_unknown == 2);
}

TEST_CASE("loader rejects malformed similarity rows") {
  Vocabulary vocab = Vocabulary::build({"bar are"}, 1);
  auto load_str = [&](const std::string& s) {
    std::istringstream in(s);
    return load_similarity(in, vocab);
  };
  CHECK_THROWS_AS(load_str("bar\tare\n"), DataError);
  CHECK_THROWS_AS(load_str("bar\tare\tnope\n"), DataError);
  CHECK_THROWS_AS(load_str("bar\tare\t0\n"), DataError);
  CHECK_THROWS_AS(load_str("bar\tare\t1.2\n"), DataError);
  // Diagonal rows are checked for range but carry no information.
  CHECK_THROWS_AS(load_str("bar\tbar\t1.2\n"), DataError);
  SimilarityLoadResult diag = load_str("bar\tbar\t0.5\nbar\tare\t0.8\n");
  CHECK(diag.matrix.pair_count() == 1);
  CHECK(diag.matrix.score(vocab.lookup("bar"), vocab.lookup("bar")) == 1.0);
}
