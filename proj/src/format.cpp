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

#include "rcsbr/format.hpp"

namespace rcsbr {

std::vector<std::string> labels(const Game& game, int i, const IndexSet& s) {
  std::vector<std::string> out;
  for (int x : s) out.push_back(game.strategy_label(i, x));
  return out;
}

IndexSet strategies_from_labels(const Game& game, int i, const std::vector<std::string>& names) {
  IndexSet out;
  for (const auto& name : names) out.push_back(game.strategy_index(i, name));
  return make_set(std::move(out));
}

std::string format_set(const Game& game, int i, const IndexSet& s) {
  if (s.empty()) return "∅";
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ", ";
    out += game.strategy_label(i, s[k]);
  }
  return out + "}";
}

std::string format_product(const Game& game, const ProductSet& p) {
  if (p.empty()) return "∅";
  std::string out;
  for (int j = 0; j < game.num_players(); ++j) {
    if (j) out += " × ";
    out += format_set(game, j, p[j]);
  }
  return out;
}

std::string format_event(const Game& game, const TypeStructure& ts, int i, const Event& e) {
  if (e.empty()) return "∅";
  std::string out = "{";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) out += ", ";
    const int s = e[k] / ts.num_types(i);
    const int t = e[k] % ts.num_types(i);
    out += "(" + game.strategy_label(i, s) + ", " + ts.types[i][t] + ")";
  }
  return out + "}";
}

std::string format_event_profile(const Game& game, const TypeStructure& ts, const EventProfile& e) {
  for (const auto& part : e) {
    if (part.empty()) return "∅";
  }
  std::string out;
  for (int j = 0; j < game.num_players(); ++j) {
    if (j) out += " × ";
    out += format_event(game, ts, j, e[j]);
  }
  return out;
}

std::string format_measure(const Game& game, int i, const Measure& m) {
  std::string out;
  for (std::size_t y = 0; y < m.size(); ++y) {
    if (m[y] == 0) continue;
    if (!out.empty()) out += " + ";
    out += (m[y] == 1 ? std::string() : to_string(m[y]) + "·") + game.opponent_label(i, static_cast<int>(y));
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> format_cps(const Game& game, int i, const Cps& cps) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < cps.conditionals.size(); ++k) {
    const std::string id = k < cps.event_ids.size() ? cps.event_ids[k] : "#" + std::to_string(k);
    out.push_back(id + ": " + format_measure(game, i, cps.conditionals[k]));
  }
  return out;
}

}  // namespace rcsbr
