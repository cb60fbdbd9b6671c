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

#ifndef RCSBR_SEPARATING_HPP_
#define RCSBR_SEPARATING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rcsbr/epistemic.hpp"

namespace rcsbr {

// Real types per player inside a host structure; strategies are always
// all of S.
struct StateSpace {
  std::vector<IndexSet> real;  // host type indices
};

// Player `owner`'s closure: a type set per player, belief-closed in the host.
struct Closure {
  int owner = 0;
  std::vector<IndexSet> types;
};

// Where a type set fails to be belief-closed.
struct OpenWitness {
  int player = 0;
  int event = 0;  // index into the player's conditioning family
  int type = 0;   // host type index
};

void check_state_space(const Game& game, const TypeStructure& host, const StateSpace& ss);

std::optional<OpenWitness> find_open_witness(const Game& game, const TypeStructure& host,
                                             const std::vector<IndexSet>& types);
bool is_belief_closed(const Game& game, const TypeStructure& host, const std::vector<IndexSet>& types);
bool is_belief_closed(const Game& game, const TypeStructure& host, const StateSpace& ss);
// The negation of belief-closedness, with a witness (i, h, t_i).
std::pair<bool, std::optional<OpenWitness>> is_non_belief_closed(const Game& game, const TypeStructure& host,
                                                                 const StateSpace& ss);

// Starts from T̃_i and adds supports until nothing changes.
Closure minimal_closure(const Game& game, const TypeStructure& host, const StateSpace& ss, int i);
// Accepts any closure containing T̃_i that is belief-closed; throws
// kMismatchedStateSpace otherwise.
void check_closure(const Game& game, const TypeStructure& host, const StateSpace& ss, const Closure& cl);

// The host restricted to a belief-closed type set; `host_index[j][t]` maps
// back to host types.
TypeStructure restrict_structure(const Game& game, const TypeStructure& host, const std::vector<IndexSet>& types);

struct SeparatingStructure {
  int owner = 0;
  TypeStructure ts;
  std::vector<IndexSet> host_index;  // [player] restricted -> host type
  IndexSet real;                     // owner's real types (restricted indices)
  IndexSet imaginary;                // owner's imaginary types
  StateSpace state;                  // the state space it was induced from
  int host_size = 0;                 // total host types, to detect mismatches
};

SeparatingStructure induce_separating_structure(const Game& game, const TypeStructure& host,
                                                const StateSpace& ss, const Closure& cl);

enum class Table4Cell { kFsbrs, kProductFsbrs, kMfsbrs, kProductMfsbrs };

struct Taxonomy {
  std::vector<bool> degenerate;  // per player
  bool common = false;

  bool all_degenerate() const;
  Table4Cell cell() const;
};

std::string cell_name(Table4Cell cell);
std::string quadrant_name(const Taxonomy& tax);

// Throws kMismatchedStateSpace unless the profile has one structure per
// player, all induced from the same host and state space.
Taxonomy classify(const Game& game, const std::vector<SeparatingStructure>& profile);

// CSB^{♥,m}_i and the real RCSBR of the owner, in the structure's indices.
Event real_csb_i(const Game& game, const SeparatingStructure& st, int m);
Event real_rcsbr_i(const Game& game, const SeparatingStructure& st);

struct RealProfile {
  std::vector<Event> events;  // per player, in that player's own structure
  ProductSet projection;
};
RealProfile real_rcsbr_profile(const Game& game, const std::vector<SeparatingStructure>& profile);

struct Prop1Part {
  int part = 0;
  std::string claim;      // e.g. "∈ ∏𝕄_j"
  bool applicable = false;
  bool holds = false;
};

struct Prop1Report {
  ProductSet projection;
  Taxonomy taxonomy;
  std::vector<Prop1Part> parts;
  bool in_fsbrs = false;
  bool in_mfsbrs = false;
  bool in_product_fsbrs = false;
  bool in_product_mfsbrs = false;
  bool ok() const;  // every applicable part holds
};

Prop1Report verify_prop1(const Game& game, const std::vector<SeparatingStructure>& profile,
                         const Families& families);

struct Quadrant {
  bool degenerate = true;
  bool common = true;
};

struct Prop2Construction {
  TypeStructure host;
  StateSpace state;
  std::vector<Closure> closures;
  std::vector<SeparatingStructure> profile;
  ProductSet projection;
  Taxonomy taxonomy;
  std::vector<std::string> notes;
};

// Builds a host, a state space and closures whose real-RCSBR projection is
// the target, for the family matching the quadrant. Throws kEmptyTarget,
// kTargetNotInFamily, or kVerificationFailed if the round trip fails.
Prop2Construction construct_prop2(const Game& game, const ProductSet& target, Quadrant quadrant,
                                  const Families& families);

}  // namespace rcsbr

#endif  // RCSBR_SEPARATING_HPP_
