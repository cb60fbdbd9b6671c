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

#ifndef RCSBR_IO_HPP_
#define RCSBR_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "rcsbr/separating.hpp"

namespace rcsbr {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);  // kParseError on failure
Json parse_json(const std::string& text);

// Game files: {"players": [...], "nodes": {...}, "infosets": {...}}.
RawGame raw_game_from_json(const Json& j);
Game game_from_json(const Json& j);
Game load_game(const std::string& path);
Json game_to_json(const Game& game);

// Type-structure files, keyed by player name. Keys starting with '_' are
// ignored everywhere in these files.
TypeStructure type_structure_from_json(const Game& game, const Json& j);
TypeStructure load_type_structure(const Game& game, const std::string& path);
Json type_structure_to_json(const Game& game, const TypeStructure& ts);

// CPS over S_{-i}: {"family": [...ids...], "conditionals": {id: {atom: "p/q"}}}.
Cps cps_from_json(const Game& game, int i, const Json& j);
Json cps_to_json(const Game& game, int i, const Cps& cps);

// {"a": ["Out"], "b": ["Stop", "Go"]} or [["Out"], ["Stop", "Go"]].
ProductSet product_from_json(const Game& game, const Json& j);
Json product_to_json(const Game& game, const ProductSet& p);
Json family_to_json(const Game& game, const SetFamily& family);
Json player_family_to_json(const Game& game, const PlayerFamily& family);
Json event_to_json(const Game& game, const TypeStructure& ts, int i, const Event& e);

// State-space files: {"host": path-or-object, "real_types": {...},
// "closures": {owner: {player: [...]}}} with optional closures.
struct StateSpaceFile {
  TypeStructure host;
  StateSpace state;
  std::optional<std::vector<Closure>> closures;
};
StateSpaceFile state_space_from_json(const Game& game, const Json& j, const std::string& base_dir);
StateSpaceFile load_state_space(const Game& game, const std::string& path);
Json state_space_to_json(const Game& game, const TypeStructure& host, const StateSpace& ss,
                         const std::vector<Closure>* closures, const std::string& host_ref);

}  // namespace rcsbr

#endif  // RCSBR_IO_HPP_
