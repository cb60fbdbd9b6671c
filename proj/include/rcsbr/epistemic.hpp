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

#ifndef RCSBR_EPISTEMIC_HPP_
#define RCSBR_EPISTEMIC_HPP_

#include <vector>

#include "rcsbr/solution.hpp"
#include "rcsbr/type_structure.hpp"

namespace rcsbr {

// A subset of S_i × T_i, each pair encoded as s·|T_i| + t.
using Event = IndexSet;
// One event per player.
using EventProfile = std::vector<Event>;

inline int pair_code(const TypeStructure& ts, int i, int s, int t) { return s * ts.num_types(i) + t; }

// E_{-i} as atoms of player i's state domain.
IndexSet opponent_event(const Game& game, const TypeStructure& ts, int i, const EventProfile& e);

// Pairs (s_i, t_i) whose belief at conditioning event `event` (an index
// into the player's conditioning family) gives probability one to `e_opp`.
Event bel(const Game& game, const TypeStructure& ts, int i, int event, const IndexSet& e_opp);
// Intersection of bel over the events meeting e_opp; SB_i(∅) = ∅.
Event sb(const Game& game, const TypeStructure& ts, int i, const IndexSet& e_opp);

EventProfile rat(const Game& game, const TypeStructure& ts);

struct CsbSequence {
  std::vector<EventProfile> steps;  // CSB^0 = Rat, CSB^1, ..., fixpoint last
  EventProfile limit;
};

// CSB^{m+1} = CSB^m ∩ SB(CSB^m), iterated to its fixpoint.
CsbSequence csb_sequence(const Game& game, const TypeStructure& ts);
EventProfile csb(const Game& game, const TypeStructure& ts, int m);
EventProfile rcsbr(const Game& game, const TypeStructure& ts);

// Static games: CB^{m+1} = CB^m ∩ Bel_root(CB^m). Throws kNotStatic.
CsbSequence rcbr_sequence(const Game& game, const TypeStructure& ts);
EventProfile rcbr(const Game& game, const TypeStructure& ts);

// proj_S of an event profile (canonical empty product if any part is empty).
ProductSet project(const Game& game, const TypeStructure& ts, const EventProfile& e);
// Restriction of player i's event to the given own types.
Event restrict_types(const TypeStructure& ts, int i, const Event& e, const IndexSet& types);

struct TheoremReport {
  EventProfile rcsbr;
  ProductSet projection;
  Verdict verdict;  // is_fsbrs(projection)
};
TheoremReport check_theorem_bf(const Game& game, const TypeStructure& ts);

// One type per strategy in F_i whose first-order belief is the stored
// certificate; opponents' strategies map to their own types (strategies off
// F_j to the first type of j). Throws kNotAnFsbrs, kEmptyTarget, and
// kVerificationFailed if the round trip proj_S RCSBR = F fails.
TypeStructure construct_structure_for_fsbrs(const Game& game, const ProductSet& f);
// Same, reusing an existing certificate for f.
TypeStructure structure_from_certificate(const Game& game, const ProductSet& f, const Certificate& cert,
                                         const std::string& prefix = "");

}  // namespace rcsbr

#endif  // RCSBR_EPISTEMIC_HPP_
