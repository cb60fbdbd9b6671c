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

#ifndef RCSBR_TYPE_STRUCTURE_HPP_
#define RCSBR_TYPE_STRUCTURE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rcsbr/cps.hpp"
#include "rcsbr/game.hpp"

namespace rcsbr {

// Finite type structure. Player i's beliefs are CPSs over S_{-i} × T_{-i}
// with the events S_{-i}(h) × T_{-i}.
struct TypeStructure {
  std::vector<std::vector<std::string>> types;  // [player]
  std::vector<std::vector<Cps>> beliefs;        // [player][type]

  int num_types(int j) const { return static_cast<int>(types.at(j).size()); }
  std::vector<int> type_counts() const;
  int type_index(int j, std::string_view name) const;  // throws kUnknownType
};

// Encoding of S_{-i} × T_{-i}. Opponent j contributes the coordinate
// s_j·|T_j| + t_j (the same encoding used for player j's own events);
// the first opponent is most significant.
class StateDomain {
 public:
  StateDomain(const Game& game, const std::vector<int>& type_counts, int i);

  int size() const { return size_; }
  const std::vector<int>& opponents() const { return opp_; }
  int encode(const std::vector<int>& s, const std::vector<int>& t) const;
  std::vector<int> coordinates(int atom) const;  // per opponent: s·|T|+t
  int strategy_profile(int atom) const;          // index into S_{-i}
  std::vector<int> strategies(int atom) const;
  std::vector<int> types(int atom) const;
  // C × T_{-i}.
  IndexSet lift(const IndexSet& opponent_event) const;
  // ∏_{j≠i} E_j with E_j given in the pair encoding; empty if any E_j is.
  IndexSet product(const std::vector<IndexSet>& per_player) const;

 private:
  const Game* game_;
  int i_;
  std::vector<int> opp_;
  std::vector<int> type_count_;  // per opponent
  std::vector<int> radix_;       // per opponent
  int size_ = 1;
};

// Empty belief skeleton for player i over the lifted conditioning family.
Cps lifted_skeleton(const Game& game, const std::vector<int>& type_counts, int i);

struct TypeIssue {
  int player = 0;
  int type = 0;
  CpsViolation violation;
};

struct TypeStructureReport {
  std::vector<TypeIssue> issues;
  std::vector<std::string> warnings;  // duplicate-belief (redundant) types
  bool ok() const { return issues.empty(); }
};

TypeStructureReport validate_type_structure(const Game& game, const TypeStructure& ts);
// Throws the first issue as an Error.
void require_valid_type_structure(const Game& game, const TypeStructure& ts);

// marg_{S_{-i}} of the belief of type t of player i.
Cps first_order_cps(const Game& game, const TypeStructure& ts, int i, int t);

// Builds a structure whose type `specs[i][k]` has first-order belief
// `first_order` and believes that each opponent strategy s_j comes with the
// type image[j][s_j].
struct TypeSpec {
  std::string name;
  Cps first_order;
};
TypeStructure push_forward(const Game& game, const std::vector<std::vector<TypeSpec>>& specs,
                           const std::vector<std::vector<int>>& image);

}  // namespace rcsbr

#endif  // RCSBR_TYPE_STRUCTURE_HPP_
