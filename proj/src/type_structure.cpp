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

#include "rcsbr/type_structure.hpp"

#include <functional>

namespace rcsbr {

std::vector<int> TypeStructure::type_counts() const {
  std::vector<int> out;
  for (const auto& t : types) out.push_back(static_cast<int>(t.size()));
  return out;
}

int TypeStructure::type_index(int j, std::string_view name) const {
  const auto& ts = types.at(j);
  for (std::size_t t = 0; t < ts.size(); ++t) {
    if (ts[t] == name) return static_cast<int>(t);
  }
  throw Error(ErrorCode::kUnknownType, "unknown type '" + std::string(name) + "'");
}

StateDomain::StateDomain(const Game& game, const std::vector<int>& type_counts, int i)
    : game_(&game), i_(i), opp_(game.opponents(i)) {
  for (int j : opp_) {
    type_count_.push_back(type_counts.at(j));
    radix_.push_back(game.num_strategies(j) * type_counts.at(j));
    size_ *= radix_.back();
  }
}

int StateDomain::encode(const std::vector<int>& s, const std::vector<int>& t) const {
  int atom = 0;
  for (std::size_t k = 0; k < opp_.size(); ++k) atom = atom * radix_[k] + s[k] * type_count_[k] + t[k];
  return atom;
}

std::vector<int> StateDomain::coordinates(int atom) const {
  std::vector<int> c(opp_.size());
  for (int k = static_cast<int>(opp_.size()) - 1; k >= 0; --k) {
    c[k] = atom % radix_[k];
    atom /= radix_[k];
  }
  return c;
}

std::vector<int> StateDomain::strategies(int atom) const {
  auto c = coordinates(atom);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] /= type_count_[k];
  return c;
}

std::vector<int> StateDomain::types(int atom) const {
  auto c = coordinates(atom);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] %= type_count_[k];
  return c;
}

int StateDomain::strategy_profile(int atom) const {
  return game_->encode_opponents(i_, strategies(atom));
}

IndexSet StateDomain::lift(const IndexSet& opponent_event) const {
  IndexSet out;
  for (int atom = 0; atom < size_; ++atom) {
    if (contains(opponent_event, strategy_profile(atom))) out.push_back(atom);
  }
  return out;
}

IndexSet StateDomain::product(const std::vector<IndexSet>& per_player) const {
  IndexSet out;
  for (int j : opp_) {
    if (per_player.at(j).empty()) return out;
  }
  for (int atom = 0; atom < size_; ++atom) {
    const auto c = coordinates(atom);
    bool ok = true;
    for (std::size_t k = 0; k < opp_.size() && ok; ++k) ok = contains(per_player[opp_[k]], c[k]);
    if (ok) out.push_back(atom);
  }
  return out;
}

Cps lifted_skeleton(const Game& game, const std::vector<int>& type_counts, int i) {
  StateDomain dom(game, type_counts, i);
  Cps cps;
  cps.domain_size = dom.size();
  for (const auto& ev : game.conditioning_family(i)) {
    cps.family.push_back(dom.lift(ev.event));
    cps.event_ids.push_back(ev.id);
    cps.conditionals.emplace_back(dom.size(), 0);
  }
  return cps;
}

TypeStructureReport validate_type_structure(const Game& game, const TypeStructure& ts) {
  TypeStructureReport report;
  if (static_cast<int>(ts.types.size()) != game.num_players() ||
      static_cast<int>(ts.beliefs.size()) != game.num_players()) {
    throw Error(ErrorCode::kParseError, "type structure does not list every player");
  }
  const auto counts = ts.type_counts();
  for (int i = 0; i < game.num_players(); ++i) {
    if (ts.types[i].empty()) {
      throw Error(ErrorCode::kParseError, "player '" + game.player_name(i) + "' has no types");
    }
    const Cps skeleton = lifted_skeleton(game, counts, i);
    for (int t = 0; t < ts.num_types(i); ++t) {
      const Cps& b = ts.beliefs[i].at(t);
      if (b.domain_size != skeleton.domain_size || b.family != skeleton.family) {
        report.issues.push_back({i, t, {ErrorCode::kUnknownConditioningEvent, -1, -1, -1,
                                        "belief is not indexed by the lifted conditioning family"}});
        continue;
      }
      if (auto v = validate_cps(b)) report.issues.push_back({i, t, *v});
      for (int u = 0; u < t; ++u) {
        if (ts.beliefs[i][u].conditionals == b.conditionals) {
          report.warnings.push_back("types '" + ts.types[i][u] + "' and '" + ts.types[i][t] +
                                    "' of player '" + game.player_name(i) + "' hold identical beliefs");
        }
      }
    }
  }
  return report;
}

void require_valid_type_structure(const Game& game, const TypeStructure& ts) {
  const auto report = validate_type_structure(game, ts);
  if (!report.ok()) {
    const auto& issue = report.issues.front();
    throw Error(issue.violation.code, "player '" + game.player_name(issue.player) + "', type '" +
                                          ts.types[issue.player][issue.type] + "': " + issue.violation.message);
  }
}

Cps first_order_cps(const Game& game, const TypeStructure& ts, int i, int t) {
  StateDomain dom(game, ts.type_counts(), i);
  Cps out;
  out.domain_size = game.num_opponent_profiles(i);
  const Cps& b = ts.beliefs.at(i).at(t);
  for (std::size_t k = 0; k < game.conditioning_family(i).size(); ++k) {
    out.family.push_back(game.conditioning_family(i)[k].event);
    out.event_ids.push_back(game.conditioning_family(i)[k].id);
    Measure m(out.domain_size, 0);
    for (int atom = 0; atom < dom.size(); ++atom) {
      if (b.conditionals.at(k)[atom] != 0) m[dom.strategy_profile(atom)] += b.conditionals[k][atom];
    }
    out.conditionals.push_back(std::move(m));
  }
  return out;
}

TypeStructure push_forward(const Game& game, const std::vector<std::vector<TypeSpec>>& specs,
                           const std::vector<std::vector<int>>& image) {
  TypeStructure ts;
  ts.types.resize(game.num_players());
  ts.beliefs.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    for (const TypeSpec& spec : specs.at(i)) ts.types[i].push_back(spec.name);
  }
  const auto counts = ts.type_counts();
  for (int i = 0; i < game.num_players(); ++i) {
    StateDomain dom(game, counts, i);
    const auto opp = game.opponents(i);
    for (const TypeSpec& spec : specs[i]) {
      Cps b = lifted_skeleton(game, counts, i);
      for (std::size_t k = 0; k < b.family.size(); ++k) {
        const Measure& m = spec.first_order.conditionals.at(k);
        for (int y = 0; y < game.num_opponent_profiles(i); ++y) {
          if (m[y] == 0) continue;
          const auto s = game.decode_opponents(i, y);
          std::vector<int> t(opp.size());
          for (std::size_t q = 0; q < opp.size(); ++q) t[q] = image.at(opp[q]).at(s[q]);
          b.conditionals[k][dom.encode(s, t)] += m[y];
        }
      }
      ts.beliefs[i].push_back(std::move(b));
    }
  }
  return ts;
}

}  // namespace rcsbr
