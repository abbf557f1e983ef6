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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "prmlm/rng.hpp"
#include "prmlm/spearman.hpp"
#include "prmlm/types.hpp"

using namespace prmlm;

namespace {

// Brute-force reference: midranks by definition, then a plain product-moment
// coefficient in long double. Kept free of the library's internals.
std::vector<double> reference_ranks(const std::vector<double>& v) {
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t below = 0, equal = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++below;
      if (v[j] == v[i]) ++equal;
    }
    // Midrank: average of the occupied rank positions.
    ranks[i] = static_cast<double>(below) + 0.5 * static_cast<double>(equal + 1);
  }
  return ranks;
}

double reference_spearman(const std::vector<double>& x,
                          const std::vector<double>& y) {
  auto rx = reference_ranks(x);
  auto ry = reference_ranks(y);
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= rx.size();
  my /= ry.size();
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

}  // namespace

TEST_CASE("midranks average tied positions") {
  std::vector<double> v = {3.0, 1.0, 4.0, 1.0, 5.0};
  std::vector<double> r = midranks(v);
  CHECK(r == std::vector<double>{3.0, 1.5, 4.0, 1.5, 5.0});
  std::vector<double> all_tied = {2.0, 2.0, 2.0};
  CHECK(midranks(all_tied) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("frozen coefficients") {
  CHECK(spearman(std::vector<double>{1, 2, 2, 4},
                 std::vector<double>{1, 3, 2, 4}) ==
        doctest::Approx(0.9486832980505138).epsilon(1e-14));
  CHECK(spearman(std::vector<double>{3, 1, 4, 1, 5},
                 std::vector<double>{2, 7, 1, 8, 2}) ==
        doctest::Approx(-0.7894736842105263).epsilon(1e-14));
}

TEST_CASE("monotone agreement is exactly one, disagreement minus one") {
  std::vector<double> x = {1.5, 9.0, 2e-3, 40.0, 7.0};
  std::vector<double> up = {2.0, 30.0, 1.0, 100.0, 8.5};
  std::vector<double> down = {-2.0, -30.0, -1.0, -100.0, -8.5};
  CHECK(spearman(x, up) == 1.0);
  CHECK(spearman(x, down) == -1.0);
  CHECK(spearman(x, x) == 1.0);
}

TEST_CASE("rank transform invariance") {
  Splitmix64 rng(99);
  std::vector<double> x(20), y(20);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.next_double() * 10 - 5;
    y[i] = rng.next_double() * 10 - 5;
  }
  double base = spearman(x, y);
  // Any strictly increasing transform of either side leaves ranks alone.
  std::vector<double> ex(x.size()), cy(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    ex[i] = std::exp(x[i]);
    cy[i] = y[i] * y[i] * y[i];
  }
  CHECK(spearman(ex, y) == base);
  CHECK(spearman(ex, cy) == base);
  // Swapping the arguments is symmetric.
  CHECK(spearman(y, x) == base);
  // A strictly decreasing transform flips the sign.
  std::vector<double> neg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
  CHECK(spearman(neg, y) == -base);
}

TEST_CASE("agreement with the brute-force reference, ties included") {
  Splitmix64 rng(20260420);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 3 + rng.next_index(30);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Coarse grids force plenty of ties.
      x[i] = static_cast<double>(rng.next_index(8));
      y[i] = static_cast<double>(rng.next_index(8));
    }
    bool x_flat = std::all_of(x.begin(), x.end(),
                              [&](double v) { return v == x[0]; });
    bool y_flat = std::all_of(y.begin(), y.end(),
                              [&](double v) { return v == y[0]; });
    if (x_flat || y_flat) {
      CHECK_THROWS_AS(spearman(x, y), DataError);
      continue;
    }
    double got = spearman(x, y);
    double want = reference_spearman(x, y);
    CHECK(std::abs(got - want) < 1e-12);
    CHECK(got >= -1.0);
    CHECK(got <= 1.0);
  }
}

TEST_CASE("degenerate and malformed inputs are rejected") {
  std::vector<double> two = {1.0, 2.0};
  CHECK_THROWS_AS(spearman(two, two), std::invalid_argument);
  std::vector<double> three = {1.0, 2.0, 3.0};
  std::vector<double> mismatched = {1.0, 2.0};
  CHECK_THROWS_AS(spearman(three, mismatched), std::invalid_argument);
  std::vector<double> flat = {5.0, 5.0, 5.0};
  CHECK_THROWS_AS(spearman(three, flat), DataError);
  CHECK_THROWS_AS(spearman(flat, three), DataError);
  std::vector<double> nan = {1.0, std::numeric_limits<double>::quiet_NaN(), 3.0};
  CHECK_THROWS_AS(spearman(three, nan), std::invalid_argument);
  std::vector<double> inf = {1.0, std::numeric_limits<double>::infinity(), 3.0};
  CHECK_THROWS_AS(spearman(inf, three), std::invalid_argument);
}

TEST_CASE("paired sample wrapper matches the span form") {
  PairedSamples samples;
  samples.pairs = {{1.0, 4.0}, {2.0, 2.0}, {3.0, 5.0}, {4.0, 1.0}};
  samples.labels = {"w", "x", "y", "z"};
  std::vector<double> x = {1, 2, 3, 4}, y = {4, 2, 5, 1};
  CHECK(spearman(samples) == spearman(x, y));
}
