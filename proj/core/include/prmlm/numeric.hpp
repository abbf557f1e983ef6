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

#ifndef PRMLM_NUMERIC_HPP_
#define PRMLM_NUMERIC_HPP_

#include <cstdio>
#include <string>

namespace prmlm {

// Compensated (Kahan) accumulator. Summation order is fixed by the caller,
// so results are reproducible across runs.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Fixed-precision decimal formatting; all report output goes through these
// so that repeated runs are byte-identical.
inline std::string fmt_fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

// Shortest round-trip representation, used where a value must be read back
// exactly (e.g. smoothing weights in model files).
inline std::string fmt_exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  if (std::sscanf(buf, "%lf", &back) == 1 && back == v) {
    // Try shorter forms; %.17g is always sufficient but often overlong.
    for (int p = 1; p < 17; ++p) {
      char shorter[64];
      std::snprintf(shorter, sizeof(shorter), "%.*g", p, v);
      double b2 = 0.0;
      if (std::sscanf(shorter, "%lf", &b2) == 1 && b2 == v) {
        return shorter;
      }
    }
  }
  return buf;
}

}  // namespace prmlm

#endif  // PRMLM_NUMERIC_HPP_
