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

#ifndef PRMLM_REPORT_HPP_
#define PRMLM_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace prmlm {

extern const char* const kToolName;
extern const char* const kToolVersion;

enum class ReportFormat { kTsv, kJson };

// Accumulates a run report and renders it as commented TSV or as JSON.
// Values are pre-formatted strings, so both renderings carry identical
// digits and repeated runs are byte-identical.
class ReportBuilder {
 public:
  ReportBuilder(std::string command, ReportFormat format);

  // Resolved configuration, echoed into the output header.
  void config(const std::string& key, const std::string& value);

  // Starts a data section; columns apply to subsequent rows.
  void section(const std::string& name, std::vector<std::string> columns);
  void row(std::vector<std::string> values);

  // Free-form annotation ('#' line in TSV, notes array in JSON).
  void note(const std::string& text);

  std::string render() const;

 private:
  struct Section {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
  };

  std::string command_;
  ReportFormat format_;
  std::vector<std::pair<std::string, std::string>> config_;
  std::vector<std::string> notes_;
  std::vector<Section> sections_;
};

}  // namespace prmlm

#endif  // PRMLM_REPORT_HPP_
