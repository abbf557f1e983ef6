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

#ifndef PRMLM_RNG_HPP_
#define PRMLM_RNG_HPP_

#include <cmath>
#include <cstdint>

// Hand-rolled splitmix64 and Box-Muller. The standard library's
// distributions are implementation-defined, which would break the
// byte-identical output guarantee across toolchains; these are not.

namespace prmlm {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds another component into a stream key; order-sensitive.
inline std::uint64_t key_combine(std::uint64_t key, std::uint64_t v) {
  return mix64(key ^ (v + 0x9e3779b97f4a7c15ULL + (key << 6) + (key >> 2)));
}

// Sequential splitmix64 stream.
class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n); n must be positive and small (sampling only).
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(next_double() * static_cast<double>(n));
  }

 private:
  std::uint64_t state_;
};

// Standard normal deviate derived from a single key (counter-based use).
// Box-Muller on two uniforms drawn from the key's splitmix stream.
inline double gaussian_from_key(std::uint64_t key) {
  Splitmix64 g(key);
  double u1 = static_cast<double>((g.next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  double u2 = g.next_double();                                       // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

}  // namespace prmlm

#endif  // PRMLM_RNG_HPP_
