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

#ifndef RCSBR_BEST_REPLY_HPP_
#define RCSBR_BEST_REPLY_HPP_

#include <optional>
#include <vector>

#include "rcsbr/cps.hpp"
#include "rcsbr/game.hpp"

namespace rcsbr {

// Empty CPS skeleton over S_{-i} with the player's conditioning family.
Cps cps_skeleton(const Game& game, int i);

Rational expected_payoff(const Game& game, int i, int s_i, const Measure& m);
// As above; throws kSelfMassNotOne when m charges opponent profiles outside C.
Rational expected_payoff(const Game& game, int i, int s_i, const IndexSet& given, const Measure& m);

// ρ_i(μ): strategies that are best replies at every own information set
// they allow, each compared against the strategies allowing that set.
IndexSet sequential_best_replies(const Game& game, int i, const Cps& cps);

// A CPS over S_{-i} with s_star ∈ ρ_i(μ) that strongly believes F_{-i};
// with `fullness`, additionally ρ_i(μ) ⊆ fullness. The first hit in the
// canonical order (ordered partitions by number of blocks, then
// lexicographic) is returned; nullopt when none exists.
std::optional<Cps> find_justifying_cps(const Game& game, int i, int s_star, const ProductSet& f,
                                       const std::optional<IndexSet>& fullness = std::nullopt);

// One certificate per ordered partition that admits one.
std::vector<Cps> find_all_justifying_cps(const Game& game, int i, int s_star, const ProductSet& f,
                                         const std::optional<IndexSet>& fullness = std::nullopt);

// Ordered partitions of {0..n-1} as block labels per element, surjective
// onto {0..k-1}, by k then lexicographically.
std::vector<std::vector<int>> ordered_partitions(int n);

}  // namespace rcsbr

#endif  // RCSBR_BEST_REPLY_HPP_
