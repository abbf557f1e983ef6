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

#include "prmlm/demo.hpp"

#include <array>
#include <string>

#include "prmlm/rng.hpp"

namespace prmlm {

namespace {

// Four families of near-homophones: one-letter spelling differences give
// them high proxy similarity to each other and almost none to anything else.
const std::array<std::array<const char*, 5>, 4> kFamilies = {{
    {"bale", "gale", "male", "pale", "tale"},
    {"bend", "fend", "lend", "mend", "tend"},
    {"dine", "fine", "line", "mine", "nine"},
    {"cast", "fast", "last", "mast", "past"},
}};

// Cue words introduce a family; fillers chain predictably; rare words are
// low-frequency surprises that hurt perplexity but cause no decode errors.
const std::array<const char*, 8> kCues = {"window",  "garden", "branch",
                                          "stream",  "copper", "silver",
                                          "meadow",  "harbor"};
const std::array<const char*, 8> kFillers = {"people", "market",  "signal",
                                             "bridge", "forest",  "castle",
                                             "lantern", "village"};
const std::array<const char*, 4> kRares = {"quartz", "sphinx", "fjord",
                                           "zephyr"};

enum class Kind { kCue, kFamily, kFiller, kRare };

struct Walker {
  Splitmix64 rng;
  Kind kind = Kind::kCue;
  std::size_t index = 0;  // cue/filler/rare index, or family * 8 + member

  explicit Walker(std::uint64_t seed) : rng(seed) {}

  const char* start() {
    kind = Kind::kCue;
    index = rng.next_index(kCues.size());
    return kCues[index];
  }

  const char* step() {
    switch (kind) {
      case Kind::kCue: {
        // Family entry probability varies by cue, 0.30 .. 0.80.
        double p_family =
            0.30 + 0.50 * static_cast<double>((index * 7) % 8) / 7.0;
        if (rng.next_double() < p_family) {
          std::size_t family = index % kFamilies.size();
          std::size_t member = rng.next_index(5);
          kind = Kind::kFamily;
          index = family * 8 + member;
          return kFamilies[family][member];
        }
        kind = Kind::kFiller;
        index = rng.next_index(kFillers.size());
        return kFillers[index];
      }
      case Kind::kFamily: {
        if (rng.next_double() < 0.5) {
          kind = Kind::kCue;
          index = rng.next_index(kCues.size());
          return kCues[index];
        }
        kind = Kind::kFiller;
        index = rng.next_index(kFillers.size());
        return kFillers[index];
      }
      case Kind::kFiller: {
        double u = rng.next_double();
        if (u < 0.55) {
          index = (index + 1) % kFillers.size();  // predictable chain
          return kFillers[index];
        }
        if (u < 0.80) {
          kind = Kind::kCue;
          index = rng.next_index(kCues.size());
          return kCues[index];
        }
        if (u < 0.95) {
          kind = Kind::kRare;
          index = rng.next_index(kRares.size());
          return kRares[index];
        }
        index = rng.next_index(kFillers.size());
        return kFillers[index];
      }
      case Kind::kRare:
      default: {
        if (rng.next_double() < 0.5) {
          kind = Kind::kCue;
          index = rng.next_index(kCues.size());
          return kCues[index];
        }
        kind = Kind::kFiller;
        index = rng.next_index(kFillers.size());
        return kFillers[index];
      }
    }
  }
};

std::vector<std::string> generate(std::uint64_t seed, std::size_t sentences) {
  Walker walker(seed);
  std::vector<std::string> lines;
  lines.reserve(sentences);
  for (std::size_t s = 0; s < sentences; ++s) {
    std::size_t length = 6 + walker.rng.next_index(7);  // 6 .. 12 tokens
    std::string line = walker.start();
    for (std::size_t t = 1; t < length; ++t) {
      line += ' ';
      line += walker.step();
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

DemoFixture make_demo_fixture(std::uint64_t seed) {
  DemoFixture fixture;
  fixture.train_lines = generate(key_combine(seed, 1), 600);
  fixture.test_lines = generate(key_combine(seed, 2), 60);
  fixture.temperature = 0.25;
  fixture.alpha = 0.5;
  fixture.experiment.measure_sizes = {0, 10, 20};
  fixture.experiment.decode_nb_simil = 10;
  fixture.experiment.decode_context = ContextMode::kBigram;
  fixture.experiment.form = PrmForm::kDirect;
  fixture.experiment.sigma = 0.5;
  fixture.experiment.seed = seed;
  return fixture;
}

}  // namespace prmlm
