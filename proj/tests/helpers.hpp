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

// Small conveniences shared by the test binaries.

#ifndef RCSBR_TESTS_HELPERS_HPP_
#define RCSBR_TESTS_HELPERS_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "rcsbr/format.hpp"
#include "rcsbr/io.hpp"
#include "rcsbr/separating.hpp"

namespace rcsbr::testing {

inline Game load(const std::string& name) { return load_game(oracle::fixture(name)); }

inline IndexSet set_of(const Game& game, int i, const std::vector<std::string>& names) {
  return strategies_from_labels(game, i, names);
}

inline ProductSet product(const Game& game, const std::vector<std::vector<std::string>>& names) {
  std::vector<IndexSet> parts;
  for (int i = 0; i < game.num_players(); ++i) parts.push_back(set_of(game, i, names[i]));
  return ProductSet(std::move(parts));
}

inline std::vector<ProductSet> products(const Game& game,
                                        const std::vector<std::vector<std::vector<std::string>>>& members) {
  std::vector<ProductSet> out;
  for (const auto& m : members) out.push_back(product(game, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<IndexSet> sets_of(const Game& game, int i, const std::vector<std::vector<std::string>>& sets) {
  std::vector<IndexSet> out;
  for (const auto& s : sets) out.push_back(set_of(game, i, s));
  std::sort(out.begin(), out.end());
  return out;
}

// Pairs (strategy label, type label) of player i.
inline Event pairs(const Game& game, const TypeStructure& ts, int i,
                   const std::vector<std::pair<std::string, std::string>>& items) {
  Event e;
  for (const auto& [s, t] : items) e.push_back(pair_code(ts, i, game.strategy_index(i, s), ts.type_index(i, t)));
  return make_set(std::move(e));
}

inline std::vector<SeparatingStructure> minimal_profile(const Game& game, const TypeStructure& host,
                                                        const StateSpace& ss) {
  std::vector<SeparatingStructure> profile;
  for (int i = 0; i < game.num_players(); ++i) {
    profile.push_back(induce_separating_structure(game, host, ss, minimal_closure(game, host, ss, i)));
  }
  return profile;
}

inline const std::vector<std::string>& fixture_games() {
  static const std::vector<std::string> names = {"centipede.game.json", "static3x3.game.json",
                                                 "bos_outside.game.json", "three_player.game.json"};
  return names;
}

}  // namespace rcsbr::testing

#endif  // RCSBR_TESTS_HELPERS_HPP_
