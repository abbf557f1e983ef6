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

// Microbenchmarks over a synthetic corpus. Each fixture is rebuilt per
// benchmark so the numbers stay independent; the corpus itself is shared
// and deterministic.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "prmlm/cluster.hpp"
#include "prmlm/corpus.hpp"
#include "prmlm/demo.hpp"
#include "prmlm/ngram.hpp"
#include "prmlm/prm.hpp"
#include "prmlm/recognizer.hpp"
#include "prmlm/rng.hpp"
#include "prmlm/similarity.hpp"
#include "prmlm/spearman.hpp"

namespace {

using namespace prmlm;

struct Fixture {
  std::vector<std::string> lines;
  Vocabulary vocab;
  EncodedCorpus corpus;
  BigramModel model;
  SimilarityMatrix sim;

  Fixture()
      : lines(make_demo_fixture(7).train_lines),
        vocab(Vocabulary::build(lines, 1)),
        corpus(encode_corpus(lines, vocab)),
        model(vocab, count_bigrams(corpus, vocab), 0.5),
        sim(proxy_similarity(vocab, 0.25)) {}
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_ProxySimilarity(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(proxy_similarity(f.vocab, 0.25));
  }
}
BENCHMARK(BM_ProxySimilarity);

void BM_CountAndTrain(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    BigramModel model(f.vocab, count_bigrams(f.corpus, f.vocab), 0.5);
    benchmark::DoNotOptimize(model.alpha());
  }
}
BENCHMARK(BM_CountAndTrain);

void BM_Perplexity(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(perplexity(f.model, f.corpus));
  }
}
BENCHMARK(BM_Perplexity);

void BM_PrmDirect(benchmark::State& state) {
  const auto& f = fixture();
  PrmConfig config;
  config.nb_simil = 5;
  config.form = PrmForm::kDirect;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prm_score(f.model, f.sim, f.corpus, config));
  }
}
BENCHMARK(BM_PrmDirect);

void BM_PrmRegrouped(benchmark::State& state) {
  const auto& f = fixture();
  PrmConfig config;
  config.nb_simil = 5;
  config.form = PrmForm::kRegrouped;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prm_score(f.model, f.sim, f.corpus, config));
  }
}
BENCHMARK(BM_PrmRegrouped);

void BM_Spearman(benchmark::State& state) {
  Splitmix64 rng(11);
  std::vector<double> xs(512), ys(512);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = rng.next_double();
    ys[i] = xs[i] + 0.25 * rng.next_double();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(spearman(xs, ys));
  }
}
BENCHMARK(BM_Spearman);

void BM_ExchangePass(benchmark::State& state) {
  const auto& f = fixture();
  Objective objective;
  objective.kind = ObjectiveKind::kLikelihood;
  ExchangeOptions options;
  options.num_classes = 8;
  options.max_passes = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        exchange_cluster(f.corpus, f.vocab, objective, options));
  }
}
BENCHMARK(BM_ExchangePass);

void BM_Decode(benchmark::State& state) {
  const auto& f = fixture();
  AcousticChannel channel;
  channel.sim = &f.sim;
  channel.sigma = 0.5;
  channel.seed = 42;
  auto table = build_confusable_table(f.sim, 10);
  const auto& sentence = f.corpus.sentences.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        decode_utterance(f.model, channel, sentence, table, 0));
  }
}
BENCHMARK(BM_Decode);

}  // namespace

BENCHMARK_MAIN();
