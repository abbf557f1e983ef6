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

#ifndef PRMLM_SPEARMAN_HPP_
#define PRMLM_SPEARMAN_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prmlm/types.hpp"

namespace prmlm {

struct PairedSamples {
  std::vector<std::pair<double, double>> pairs;
  std::vector<std::string> labels;  // optional, parallel to pairs when used
};

// Fractional ranks: ties receive the mean of the ranks they span.
// Ranks start at 1; their mean is always (n + 1) / 2.
std::vector<double> midranks(std::span<const double> values);

// Spearman rank correlation: Pearson correlation of the midranks, with
// exactly monotone inputs (equal or reversed rank vectors) returning
// exactly +1 or -1. Throws std::invalid_argument for n < 3 or non-finite
// samples, DataError when either side has zero rank variance.
double spearman(std::span<const double> x, std::span<const double> y);
double spearman(const PairedSamples& samples);

}  // namespace prmlm

#endif  // PRMLM_SPEARMAN_HPP_
