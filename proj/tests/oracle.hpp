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

// Brute-force references used only by the tests. Nothing here calls the
// search or simplex code it is compared against.

#ifndef RCSBR_TESTS_ORACLE_HPP_
#define RCSBR_TESTS_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rcsbr/cps.hpp"
#include "rcsbr/game.hpp"

namespace rcsbr::oracle {

std::string fixture(const std::string& name);

// Ordered partitions as lists of blocks, generated recursively.
std::vector<std::vector<IndexSet>> ordered_partitions(int n);

// Vertices of {x : eq rows = rhs, ineq rows >= rhs, x >= 0}, found by
// solving every square subsystem with exact Gaussian elimination. Rows
// carry their right-hand side as the last entry.
std::vector<std::vector<Rational>> vertices(int n, const std::vector<std::vector<Rational>>& eq,
                                            const std::vector<std::vector<Rational>>& ineq);

// ρ_i(μ) straight from the definition.
IndexSet best_replies(const Game& game, int i, const Cps& cps);

// Whether a CPS over S_{-i} with s* ∈ ρ, strong belief in F_{-i} and
// (optionally) ρ ⊆ fullness exists.
bool justifiable(const Game& game, int i, int s_star, const IndexSet& f_opp,
                 const std::optional<IndexSet>& fullness);

// Iterated elimination of never-best replies to correlated beliefs.
std::vector<IndexSet> correlated_rationalizable(const Game& game);

}  // namespace rcsbr::oracle

#endif  // RCSBR_TESTS_ORACLE_HPP_
