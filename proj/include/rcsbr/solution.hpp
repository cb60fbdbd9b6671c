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

#ifndef RCSBR_SOLUTION_HPP_
#define RCSBR_SOLUTION_HPP_

#include <map>
#include <optional>
#include <vector>

#include "rcsbr/best_reply.hpp"
#include "rcsbr/game.hpp"

namespace rcsbr {

// Largest |S_i| for which product families are enumerated exhaustively.
inline constexpr int kMaxEnumeratedStrategies = 6;

enum class FamilyKind { kSrSequence, kFsbrs, kFsbrsPlayer, kMfsbrs, kMfsbrsPlayer, kFbrs, kPInfinity };

struct SetFamily {
  FamilyKind kind = FamilyKind::kFsbrs;
  std::vector<ProductSet> members;  // sorted, unique

  bool contains(const ProductSet& p) const;
};

struct PlayerFamily {
  FamilyKind kind = FamilyKind::kFsbrsPlayer;
  int player = 0;
  std::vector<IndexSet> members;  // sorted, unique

  bool contains(const IndexSet& s) const;
};

// Whether every component of p lies in the matching player family.
bool in_product(const std::vector<PlayerFamily>& families, const ProductSet& p);

// Justifying CPS per player and strategy; `witness` is the FSBRS used.
struct Certificate {
  ProductSet witness;
  std::vector<std::map<int, Cps>> cps;  // [player][strategy]
};

struct Verdict {
  bool holds = false;
  std::optional<Certificate> certificate;
};

struct SrResult {
  std::vector<ProductSet> sequence;  // SR^0, SR^1, ..., ending at the fixpoint
  ProductSet limit;
};

SrResult strong_rationalizability(const Game& game);

Verdict is_fsbrs(const Game& game, const ProductSet& f);

// All product subsets of S (plus the empty product) in canonical order.
// Throws kEnumerationTooLarge past kMaxEnumeratedStrategies.
std::vector<ProductSet> candidate_products(const Game& game);

SetFamily enumerate_fsbrs(const Game& game);
PlayerFamily player_specific(const SetFamily& family, int i);
PlayerFamily player_specific_fsbrs(const Game& game, int i);

// Existential reading: some F in the family contains M and, for each
// s* in M_i, some CPS justifies s* within F with all best replies in M_i.
Verdict is_mfsbrs(const Game& game, const ProductSet& m, const SetFamily& fsbrs);
Verdict is_mfsbrs(const Game& game, const ProductSet& m);
SetFamily enumerate_mfsbrs(const Game& game, const SetFamily& fsbrs);
SetFamily enumerate_mfsbrs(const Game& game);
PlayerFamily player_specific_mfsbrs(const Game& game, int i);

struct Families {
  SetFamily fsbrs;
  SetFamily mfsbrs;
  std::vector<PlayerFamily> fsbrs_i;
  std::vector<PlayerFamily> mfsbrs_i;
};
Families compute_families(const Game& game);

struct PInfinityResult {
  std::vector<ProductSet> sequence;
  ProductSet limit;
};

// Correlated rationalizability; throws kNotStatic on dynamic games.
PInfinityResult correlated_rationalizability(const Game& game);

// Whether s_i is a best reply (against all of S_i) to some joint belief
// supported in `opponents`.
bool is_best_reply_to_some_belief(const Game& game, int i, int s_i, const IndexSet& opponents);

// is_fsbrs on a static game; throws kNotStatic otherwise.
Verdict is_fbrs(const Game& game, const ProductSet& f);
SetFamily enumerate_fbrs(const Game& game);

void require_static(const Game& game);

}  // namespace rcsbr

#endif  // RCSBR_SOLUTION_HPP_
