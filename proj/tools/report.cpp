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

#include "report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "rcsbr/error.hpp"

namespace rcsbr::cli {
namespace {

// Display width in code points, so that "×" and "∅" count as one column.
std::size_t width(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; });
}

}  // namespace

std::string sha256_text(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 0xF];
  }
  return out;
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  return sha256_text(std::string(std::istreambuf_iterator<char>(in), {}));
}

std::vector<std::string> align(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& row : rows) {
    if (w.size() < row.size()) w.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], width(row[c]));
  }
  std::vector<std::string> out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(w[c] - width(row[c]) + 2, ' ');
    }
    out.push_back(line);
  }
  return out;
}

Report::Report(std::vector<std::string> argv) : argv_(std::move(argv)) {}

void Report::add_input(const std::string& path) {
  for (const auto& [p, _] : inputs_) {
    if (p == path) return;
  }
  inputs_.emplace_back(path, sha256_file(path));
}

void Report::section(const std::string& heading, std::vector<std::string> lines) {
  if (!heading.empty()) {
    if (!body_.empty()) body_.push_back("");
    body_.push_back(heading);
  }
  for (auto& l : lines) body_.push_back(l.empty() ? l : "  " + l);
}

void Report::line(const std::string& text) { body_.push_back(text); }

void Report::assertion(const std::string& name, bool holds, const std::string& detail) {
  assertions_.push_back({name, holds, detail});
}

bool Report::all_hold() const {
  return std::all_of(assertions_.begin(), assertions_.end(), [](const Assertion& a) { return a.holds; });
}

std::string Report::text() const {
  std::ostringstream out;
  out << "$ rcsbr";
  for (const auto& a : argv_) out << ' ' << a;
  out << '\n';
  for (const auto& [path, digest] : inputs_) out << "input " << path << "  sha256:" << digest << '\n';
  out << '\n';
  for (const auto& l : body_) out << l << '\n';
  if (!assertions_.empty()) {
    out << "\nassertions\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& a : assertions_) rows.push_back({a.holds ? "PASS" : "FAIL", a.name, a.detail});
    for (const auto& l : align(rows)) {
      std::string t = l;
      while (!t.empty() && t.back() == ' ') t.pop_back();
      out << "  " << t << '\n';
    }
  }
  return out.str();
}

std::string Report::json() const {
  Json j;
  j["command"] = argv_;
  Json inputs = Json::array();
  for (const auto& [path, digest] : inputs_) inputs.push_back({{"path", path}, {"sha256", digest}});
  j["inputs"] = inputs;
  j["outputs"] = outputs_;
  Json asserts = Json::array();
  for (const auto& a : assertions_) asserts.push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
  j["assertions"] = asserts;
  return j.dump(2) + "\n";
}

}  // namespace rcsbr::cli
