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

#ifndef PRMLM_DEMO_HPP_
#define PRMLM_DEMO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "prmlm/recognizer.hpp"

namespace prmlm {

// Built-in synthetic task for the end-to-end experiment. The vocabulary
// mixes four families of near-homophones (high acoustic confusability,
// nearly interchangeable in context) with distinct filler and rare words.
// Rare words inflate perplexity without causing recognition errors, so
// perplexity ranks utterances poorly while the ratio measure, which sees
// the confusability, ranks them well.
struct DemoFixture {
  std::vector<std::string> train_lines;
  std::vector<std::string> test_lines;
  double temperature = 0.25;  // proxy similarity temperature
  double alpha = 0.5;
  ExperimentConfig experiment;
};

DemoFixture make_demo_fixture(std::uint64_t seed);

}  // namespace prmlm

#endif  // PRMLM_DEMO_HPP_
