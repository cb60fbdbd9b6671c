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

#include "rcsbr/epistemic.hpp"

namespace rcsbr {

IndexSet opponent_event(const Game& game, const TypeStructure& ts, int i, const EventProfile& e) {
  return StateDomain(game, ts.type_counts(), i).product(e);
}

Event bel(const Game& game, const TypeStructure& ts, int i, int event, const IndexSet& e_opp) {
  Event out;
  if (e_opp.empty()) return out;
  for (int t = 0; t < ts.num_types(i); ++t) {
    if (mass(ts.beliefs.at(i).at(t).conditionals.at(event), e_opp) != 1) continue;
    for (int s = 0; s < game.num_strategies(i); ++s) out.push_back(pair_code(ts, i, s, t));
  }
  return make_set(std::move(out));
}

Event sb(const Game& game, const TypeStructure& ts, int i, const IndexSet& e_opp) {
  if (e_opp.empty()) return {};
  const Cps skeleton = lifted_skeleton(game, ts.type_counts(), i);
  Event out = full_set(game.num_strategies(i) * ts.num_types(i));
  for (std::size_t k = 0; k < skeleton.family.size(); ++k) {
    if (intersects(skeleton.family[k], e_opp)) out = intersect(out, bel(game, ts, i, static_cast<int>(k), e_opp));
  }
  return out;
}

EventProfile rat(const Game& game, const TypeStructure& ts) {
  EventProfile out(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    for (int t = 0; t < ts.num_types(i); ++t) {
      for (int s : sequential_best_replies(game, i, first_order_cps(game, ts, i, t))) {
        out[i].push_back(pair_code(ts, i, s, t));
      }
    }
    out[i] = make_set(std::move(out[i]));
  }
  return out;
}

namespace {

template <typename Step>
CsbSequence iterate(const Game& game, const TypeStructure& ts, Step step) {
  CsbSequence seq;
  EventProfile cur = rat(game, ts);
  seq.steps.push_back(cur);
  while (true) {
    EventProfile next(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      next[i] = intersect(cur[i], step(i, opponent_event(game, ts, i, cur)));
    }
    if (next == cur) break;
    seq.steps.push_back(next);
    cur = std::move(next);
  }
  seq.limit = cur;
  return seq;
}

}  // namespace

CsbSequence csb_sequence(const Game& game, const TypeStructure& ts) {
  return iterate(game, ts, [&](int i, const IndexSet& e) { return sb(game, ts, i, e); });
}

EventProfile csb(const Game& game, const TypeStructure& ts, int m) {
  const auto seq = csb_sequence(game, ts);
  return m < static_cast<int>(seq.steps.size()) ? seq.steps[m] : seq.limit;
}

EventProfile rcsbr(const Game& game, const TypeStructure& ts) { return csb_sequence(game, ts).limit; }

CsbSequence rcbr_sequence(const Game& game, const TypeStructure& ts) {
  require_static(game);
  return iterate(game, ts, [&](int i, const IndexSet& e) { return bel(game, ts, i, 0, e); });
}

EventProfile rcbr(const Game& game, const TypeStructure& ts) { return rcbr_sequence(game, ts).limit; }

ProductSet project(const Game& game, const TypeStructure& ts, const EventProfile& e) {
  std::vector<IndexSet> parts(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    for (int code : e.at(i)) parts[i].push_back(code / ts.num_types(i));
  }
  return ProductSet(std::move(parts));
}

Event restrict_types(const TypeStructure& ts, int i, const Event& e, const IndexSet& types) {
  Event out;
  for (int code : e) {
    if (contains(types, code % ts.num_types(i))) out.push_back(code);
  }
  return out;
}

TheoremReport check_theorem_bf(const Game& game, const TypeStructure& ts) {
  TheoremReport report;
  report.rcsbr = rcsbr(game, ts);
  report.projection = project(game, ts, report.rcsbr);
  report.verdict = is_fsbrs(game, report.projection);
  return report;
}

TypeStructure structure_from_certificate(const Game& game, const ProductSet& f, const Certificate& cert,
                                         const std::string& prefix) {
  std::vector<std::vector<TypeSpec>> specs(game.num_players());
  std::vector<std::vector<int>> image(game.num_players());
  for (int j = 0; j < game.num_players(); ++j) {
    image[j].assign(game.num_strategies(j), 0);
    for (int s : f[j]) {
      image[j][s] = static_cast<int>(specs[j].size());
      specs[j].push_back({prefix + "t." + game.strategy_label(j, s), cert.cps.at(j).at(s)});
    }
  }
  return push_forward(game, specs, image);
}

TypeStructure construct_structure_for_fsbrs(const Game& game, const ProductSet& f) {
  if (f.empty()) throw Error(ErrorCode::kEmptyTarget, "the empty product needs no structure");
  Verdict v = is_fsbrs(game, f);
  if (!v.holds) throw Error(ErrorCode::kNotAnFsbrs, "the target is not a full strong best-reply set");
  TypeStructure ts = structure_from_certificate(game, f, *v.certificate);
  require_valid_type_structure(game, ts);
  if (project(game, ts, rcsbr(game, ts)) != f) {
    throw Error(ErrorCode::kVerificationFailed, "constructed structure does not reproduce the target");
  }
  return ts;
}

}  // namespace rcsbr
