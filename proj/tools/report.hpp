// Copyright 2026 The rcsbr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run reports: a text rendering for people and a JSON rendering for
// scripts, built from the same data so the two never disagree.

#ifndef RCSBR_TOOLS_REPORT_HPP_
#define RCSBR_TOOLS_REPORT_HPP_

#include <string>
#include <vector>

#include "rcsbr/io.hpp"

namespace rcsbr::cli {

// Hex SHA-256 of a file's bytes; kParseError if it cannot be read.
std::string sha256_file(const std::string& path);
std::string sha256_text(const std::string& text);

// Left-aligned columns separated by two spaces.
std::vector<std::string> align(const std::vector<std::vector<std::string>>& rows);

class Report {
 public:
  explicit Report(std::vector<std::string> argv);

  void add_input(const std::string& path);
  // A block of text lines under a heading; an empty heading continues the
  // previous block.
  void section(const std::string& heading, std::vector<std::string> lines);
  void line(const std::string& text);
  void assertion(const std::string& name, bool holds, const std::string& detail = "");

  Json& outputs() { return outputs_; }
  bool all_hold() const;

  std::string text() const;
  std::string json() const;

 private:
  struct Assertion {
    std::string name;
    bool holds;
    std::string detail;
  };

  std::vector<std::string> argv_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::string> body_;
  std::vector<Assertion> assertions_;
  Json outputs_ = Json::object();
};

}  // namespace rcsbr::cli

#endif  // RCSBR_TOOLS_REPORT_HPP_
