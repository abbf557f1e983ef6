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

#include "prmlm/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "prmlm/numeric.hpp"

namespace prmlm {

std::vector<double> midranks(std::span<const double> values) {
  std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) tie; their 1-based ranks average to:
    double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("sample vectors differ in length");
  }
  std::size_t n = x.size();
  if (n < 3) {
    throw std::invalid_argument("need at least 3 sample pairs");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw std::invalid_argument("samples must be finite");
    }
  }

  std::vector<double> rx = midranks(x);
  std::vector<double> ry = midranks(y);

  // Exactly monotone data short-circuits to +/-1 before any rounding.
  bool identical = true, reversed = true;
  double flip = static_cast<double>(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (rx[i] != ry[i]) identical = false;
    if (rx[i] != flip - ry[i]) reversed = false;
  }

  // Midranks always average to (n + 1) / 2.
  double mean = 0.5 * static_cast<double>(n + 1);
  KahanSum sxy, sxx, syy;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = rx[i] - mean;
    double dy = ry[i] - mean;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  if (sxx.value() <= 0.0 || syy.value() <= 0.0) {
    throw DataError("degenerate samples: a variable has zero rank variance");
  }
  if (identical) return 1.0;
  if (reversed) return -1.0;
  double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
  return std::clamp(r, -1.0, 1.0);
}

double spearman(const PairedSamples& samples) {
  std::vector<double> x, y;
  x.reserve(samples.pairs.size());
  y.reserve(samples.pairs.size());
  for (const auto& [a, b] : samples.pairs) {
    x.push_back(a);
    y.push_back(b);
  }
  return spearman(x, y);
}

}  // namespace prmlm
