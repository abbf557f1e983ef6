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

#ifndef PRMLM_TYPES_HPP_
#define PRMLM_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prmlm {

using WordId = std::uint32_t;
using ClassId = std::uint32_t;

// Raised for malformed or inconsistent input data (files, corpora, tables).
// Contract violations in code use std::invalid_argument instead.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace prmlm

#endif  // PRMLM_TYPES_HPP_
