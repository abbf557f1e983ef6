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

#include "prmlm/report.hpp"

#include <sstream>

#include "json.hpp"

namespace prmlm {

const char* const kToolName = "prmlm";
const char* const kToolVersion = "0.1.0";

ReportBuilder::ReportBuilder(std::string command, ReportFormat format)
    : command_(std::move(command)), format_(format) {}

void ReportBuilder::config(const std::string& key, const std::string& value) {
  config_.emplace_back(key, value);
}

void ReportBuilder::section(const std::string& name,
                            std::vector<std::string> columns) {
  sections_.push_back(Section{name, std::move(columns), {}});
}

void ReportBuilder::row(std::vector<std::string> values) {
  if (sections_.empty()) section("data", {});
  sections_.back().rows.push_back(std::move(values));
}

void ReportBuilder::note(const std::string& text) { notes_.push_back(text); }

std::string ReportBuilder::render() const {
  if (format_ == ReportFormat::kTsv) {
    std::ostringstream out;
    out << "# " << kToolName << " " << kToolVersion << " " << command_ << "\n";
    for (const auto& [key, value] : config_) {
      out << "# " << key << ": " << value << "\n";
    }
    for (const auto& note : notes_) {
      out << "# " << note << "\n";
    }
    for (const auto& section : sections_) {
      if (sections_.size() > 1) out << "# [" << section.name << "]\n";
      if (!section.columns.empty()) {
        out << "#";
        for (const auto& col : section.columns) out << ' ' << col;
        out << "\n";
      }
      for (const auto& row : section.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << '\t';
          out << row[i];
        }
        out << "\n";
      }
    }
    return out.str();
  }

  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command_;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config_) cfg[key] = value;
  j["config"] = std::move(cfg);
  if (!notes_.empty()) j["notes"] = notes_;
  nlohmann::ordered_json sections = nlohmann::ordered_json::array();
  for (const auto& section : sections_) {
    nlohmann::ordered_json s;
    s["name"] = section.name;
    s["columns"] = section.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : section.rows) rows.push_back(row);
    s["rows"] = std::move(rows);
    sections.push_back(std::move(s));
  }
  j["sections"] = std::move(sections);
  return j.dump(2) + "\n";
}

}  // namespace prmlm
