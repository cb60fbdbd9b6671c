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

#include "rcsbr/separating.hpp"

#include <algorithm>
#include <deque>

namespace rcsbr {

void check_state_space(const Game& game, const TypeStructure& host, const StateSpace& ss) {
  if (static_cast<int>(ss.real.size()) != game.num_players()) {
    throw Error(ErrorCode::kMismatchedStateSpace, "state space must list real types for every player");
  }
  for (int j = 0; j < game.num_players(); ++j) {
    if (ss.real[j].empty()) {
      throw Error(ErrorCode::kMismatchedStateSpace, "player '" + game.player_name(j) + "' has no real types");
    }
    for (int t : ss.real[j]) {
      if (t < 0 || t >= host.num_types(j)) {
        throw Error(ErrorCode::kUnknownType, "type index " + std::to_string(t) + " of player '" +
                                                 game.player_name(j) + "' is not in the host");
      }
    }
  }
}

std::optional<OpenWitness> find_open_witness(const Game& game, const TypeStructure& host,
                                             const std::vector<IndexSet>& types) {
  for (int i = 0; i < game.num_players(); ++i) {
    StateDomain dom(game, host.type_counts(), i);
    const auto& opp = dom.opponents();
    for (int t : types.at(i)) {
      const Cps& b = host.beliefs.at(i).at(t);
      for (std::size_t k = 0; k < b.conditionals.size(); ++k) {
        for (int atom : support(b.conditionals[k])) {
          const auto tt = dom.types(atom);
          for (std::size_t q = 0; q < opp.size(); ++q) {
            if (!contains(types.at(opp[q]), tt[q])) return OpenWitness{i, static_cast<int>(k), t};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_belief_closed(const Game& game, const TypeStructure& host, const std::vector<IndexSet>& types) {
  return !find_open_witness(game, host, types).has_value();
}

bool is_belief_closed(const Game& game, const TypeStructure& host, const StateSpace& ss) {
  check_state_space(game, host, ss);
  return is_belief_closed(game, host, ss.real);
}

std::pair<bool, std::optional<OpenWitness>> is_non_belief_closed(const Game& game, const TypeStructure& host,
                                                                 const StateSpace& ss) {
  check_state_space(game, host, ss);
  auto w = find_open_witness(game, host, ss.real);
  return {w.has_value(), w};
}

Closure minimal_closure(const Game& game, const TypeStructure& host, const StateSpace& ss, int i) {
  check_state_space(game, host, ss);
  Closure cl;
  cl.owner = i;
  cl.types.assign(game.num_players(), {});
  std::deque<std::pair<int, int>> work;
  for (int t : ss.real[i]) {
    cl.types[i].push_back(t);
    work.emplace_back(i, t);
  }
  while (!work.empty()) {
    const auto [j, t] = work.front();
    work.pop_front();
    StateDomain dom(game, host.type_counts(), j);
    const auto& opp = dom.opponents();
    for (const Measure& m : host.beliefs.at(j).at(t).conditionals) {
      for (int atom : support(m)) {
        const auto tt = dom.types(atom);
        for (std::size_t q = 0; q < opp.size(); ++q) {
          IndexSet& set = cl.types[opp[q]];
          if (contains(set, tt[q])) continue;
          set.insert(std::upper_bound(set.begin(), set.end(), tt[q]), tt[q]);
          work.emplace_back(opp[q], tt[q]);
        }
      }
    }
  }
  return cl;
}

void check_closure(const Game& game, const TypeStructure& host, const StateSpace& ss, const Closure& cl) {
  check_state_space(game, host, ss);
  if (static_cast<int>(cl.types.size()) != game.num_players()) {
    throw Error(ErrorCode::kMismatchedStateSpace, "closure must list types for every player");
  }
  for (int j = 0; j < game.num_players(); ++j) {
    for (int t : cl.types[j]) {
      if (t < 0 || t >= host.num_types(j)) throw Error(ErrorCode::kUnknownType, "closure names a type outside the host");
    }
  }
  if (!is_subset(ss.real.at(cl.owner), cl.types[cl.owner])) {
    throw Error(ErrorCode::kMismatchedStateSpace,
                "closure of player '" + game.player_name(cl.owner) + "' omits some real types");
  }
  if (auto w = find_open_witness(game, host, cl.types)) {
    throw Error(ErrorCode::kMismatchedStateSpace,
                "closure of player '" + game.player_name(cl.owner) + "' is not belief-closed (type '" +
                    host.types[w->player][w->type] + "')");
  }
}

TypeStructure restrict_structure(const Game& game, const TypeStructure& host, const std::vector<IndexSet>& types) {
  TypeStructure ts;
  ts.types.resize(game.num_players());
  ts.beliefs.resize(game.num_players());
  std::vector<std::vector<int>> local(game.num_players());
  for (int j = 0; j < game.num_players(); ++j) {
    local[j].assign(host.num_types(j), -1);
    for (int t : types.at(j)) {
      local[j][t] = static_cast<int>(ts.types[j].size());
      ts.types[j].push_back(host.types[j][t]);
    }
  }
  const auto counts = ts.type_counts();
  for (int i = 0; i < game.num_players(); ++i) {
    StateDomain from(game, host.type_counts(), i);
    StateDomain to(game, counts, i);
    const auto& opp = from.opponents();
    for (int t : types[i]) {
      const Cps& src = host.beliefs[i][t];
      Cps b = lifted_skeleton(game, counts, i);
      for (std::size_t k = 0; k < src.conditionals.size(); ++k) {
        for (int atom : support(src.conditionals[k])) {
          auto tt = from.types(atom);
          for (std::size_t q = 0; q < opp.size(); ++q) {
            tt[q] = local[opp[q]][tt[q]];
            if (tt[q] < 0) throw Error(ErrorCode::kMismatchedStateSpace, "type set is not belief-closed");
          }
          b.conditionals[k][to.encode(from.strategies(atom), tt)] += src.conditionals[k][atom];
        }
      }
      ts.beliefs[i].push_back(std::move(b));
    }
  }
  return ts;
}

SeparatingStructure induce_separating_structure(const Game& game, const TypeStructure& host,
                                                const StateSpace& ss, const Closure& cl) {
  check_closure(game, host, ss, cl);
  SeparatingStructure st;
  st.owner = cl.owner;
  st.ts = restrict_structure(game, host, cl.types);
  st.host_index = cl.types;
  st.state = ss;
  for (int j = 0; j < game.num_players(); ++j) st.host_size += host.num_types(j);
  const IndexSet& own = cl.types[cl.owner];
  for (std::size_t k = 0; k < own.size(); ++k) {
    (contains(ss.real[cl.owner], own[k]) ? st.real : st.imaginary).push_back(static_cast<int>(k));
  }
  return st;
}

bool Taxonomy::all_degenerate() const {
  for (bool d : degenerate) {
    if (!d) return false;
  }
  return true;
}

Table4Cell Taxonomy::cell() const {
  if (all_degenerate()) return common ? Table4Cell::kFsbrs : Table4Cell::kProductFsbrs;
  return common ? Table4Cell::kMfsbrs : Table4Cell::kProductMfsbrs;
}

std::string cell_name(Table4Cell cell) {
  switch (cell) {
    case Table4Cell::kFsbrs: return "𝔉";
    case Table4Cell::kProductFsbrs: return "∏𝔉_j";
    case Table4Cell::kMfsbrs: return "𝕄";
    case Table4Cell::kProductMfsbrs: return "∏𝕄_j";
  }
  return "?";
}

std::string quadrant_name(const Taxonomy& tax) {
  return std::string(tax.all_degenerate() ? "degenerate" : "non-degenerate") + " & " +
         (tax.common ? "common" : "non-common");
}

Taxonomy classify(const Game& game, const std::vector<SeparatingStructure>& profile) {
  if (static_cast<int>(profile.size()) != game.num_players()) {
    throw Error(ErrorCode::kMismatchedStateSpace, "need one separating structure per player");
  }
  Taxonomy tax;
  tax.common = true;
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& st = profile[i];
    if (st.owner != i || st.state.real != profile[0].state.real || st.host_size != profile[0].host_size) {
      throw Error(ErrorCode::kMismatchedStateSpace, "structures come from different state spaces");
    }
    tax.degenerate.push_back(st.imaginary.empty());
    tax.common = tax.common && st.host_index == profile[0].host_index;
  }
  return tax;
}

Event real_csb_i(const Game& game, const SeparatingStructure& st, int m) {
  return restrict_types(st.ts, st.owner, csb(game, st.ts, m)[st.owner], st.real);
}

Event real_rcsbr_i(const Game& game, const SeparatingStructure& st) {
  return restrict_types(st.ts, st.owner, rcsbr(game, st.ts)[st.owner], st.real);
}

RealProfile real_rcsbr_profile(const Game& game, const std::vector<SeparatingStructure>& profile) {
  RealProfile out;
  std::vector<IndexSet> parts(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& st = profile.at(i);
    out.events.push_back(real_rcsbr_i(game, st));
    for (int code : out.events.back()) parts[i].push_back(code / st.ts.num_types(i));
  }
  out.projection = ProductSet(std::move(parts));
  return out;
}

bool Prop1Report::ok() const {
  for (const auto& p : parts) {
    if (p.applicable && !p.holds) return false;
  }
  return true;
}

Prop1Report verify_prop1(const Game& game, const std::vector<SeparatingStructure>& profile,
                         const Families& families) {
  Prop1Report r;
  r.taxonomy = classify(game, profile);
  r.projection = real_rcsbr_profile(game, profile).projection;
  r.in_fsbrs = families.fsbrs.contains(r.projection);
  r.in_mfsbrs = families.mfsbrs.contains(r.projection);
  r.in_product_fsbrs = in_product(families.fsbrs_i, r.projection);
  r.in_product_mfsbrs = in_product(families.mfsbrs_i, r.projection);
  const bool deg = r.taxonomy.all_degenerate();
  r.parts.push_back({1, "∈ ∏𝕄_j", true, r.in_product_mfsbrs});
  r.parts.push_back({2, "∈ 𝕄", r.taxonomy.common, r.in_mfsbrs});
  r.parts.push_back({3, "∈ ∏𝔉_j", deg, r.in_product_fsbrs});
  r.parts.push_back({4, "∈ 𝔉", deg && r.taxonomy.common, r.in_fsbrs});
  return r;
}

namespace {

struct Piece {
  TypeStructure ts;
  std::vector<IndexSet> real;
  ProductSet witness;
};

// When the witness adds no strategies for the relevant player, that player
// gets one imaginary type
// that no other type believes in. Its first-order belief (Diracs on the
// opponent profiles in some order) differs from every real type's, so the
// structure stays non-redundant, and since nobody reaches it the real RCSBR
// is unchanged.
// Players are tried in the given order.
void add_idle_imaginary_type(const Game& game, std::vector<std::vector<TypeSpec>>& specs, const std::string& prefix,
                             const std::vector<int>& players) {
  for (int j : players) {
    const Cps skeleton = cps_skeleton(game, j);
    std::vector<int> order = full_set(skeleton.domain_size);
    do {
      Lps lps;
      for (int y : order) lps.push_back(dirac(skeleton.domain_size, y));
      Cps cps = lps_to_cps(lps, skeleton.family);
      cps.event_ids = skeleton.event_ids;
      const bool fresh = std::none_of(specs[j].begin(), specs[j].end(), [&](const TypeSpec& spec) {
        return spec.first_order.conditionals == cps.conditionals;
      });
      if (fresh) {
        specs[j].push_back({prefix + "t*.idle", std::move(cps)});
        return;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

// A structure in which the real types play exactly `x` and every type is
// reached; imaginary types carry the strategies of the witness FSBRS
// outside x.
// `owner` is the player whose closure the piece becomes (non-common case).
Piece build_piece(const Game& game, const ProductSet& x, bool degenerate, const Families& families,
                  const std::string& prefix, std::optional<int> owner = std::nullopt) {
  Piece piece;
  if (degenerate) {
    Verdict v = is_fsbrs(game, x);
    if (!v.holds) throw Error(ErrorCode::kTargetNotInFamily, "target is not a full strong best-reply set");
    piece.ts = structure_from_certificate(game, x, *v.certificate, prefix);
    piece.witness = x;
    for (int j = 0; j < game.num_players(); ++j) piece.real.push_back(full_set(piece.ts.num_types(j)));
    return piece;
  }
  // Prefer a strictly larger witness so that imaginary types exist.
  std::optional<Certificate> chosen;
  for (int pass = 0; pass < 2 && !chosen; ++pass) {
    for (const ProductSet& f : families.fsbrs.members) {
      if (f.empty() || !x.is_subset_of(f) || (pass == 0 && f == x)) continue;
      Certificate cert;
      cert.witness = f;
      cert.cps.resize(game.num_players());
      bool ok = true;
      for (int j = 0; j < game.num_players() && ok; ++j) {
        for (int s : x[j]) {
          auto cps = find_justifying_cps(game, j, s, f, x[j]);
          if (!cps) {
            ok = false;
            break;
          }
          cert.cps[j].emplace(s, std::move(*cps));
        }
      }
      if (ok) {
        chosen = std::move(cert);
        break;
      }
    }
  }
  if (!chosen) throw Error(ErrorCode::kTargetNotInFamily, "target is not a misaligned FSBRS");
  const ProductSet f = chosen->witness;
  const Verdict full = is_fsbrs(game, f);
  std::vector<std::vector<TypeSpec>> specs(game.num_players());
  std::vector<std::vector<int>> image(game.num_players());
  piece.real.assign(game.num_players(), {});
  for (int j = 0; j < game.num_players(); ++j) {
    image[j].assign(game.num_strategies(j), 0);
    for (int s : f[j]) {
      image[j][s] = static_cast<int>(specs[j].size());
      const bool real = contains(x[j], s);
      if (real) piece.real[j].push_back(image[j][s]);
      specs[j].push_back({prefix + (real ? "t." : "t*.") + game.strategy_label(j, s),
                          real ? chosen->cps[j].at(s) : full.certificate->cps.at(j).at(s)});
    }
  }
  std::vector<int> order;
  if (owner) {
    if (f[*owner].size() == x[*owner].size()) order.push_back(*owner);
  } else if (f == x) {
    order = full_set(game.num_players());
  }
  if (!order.empty()) {
    for (int j = 0; j < game.num_players(); ++j) {
      if (!contains(order, j)) order.push_back(j);
    }
    add_idle_imaginary_type(game, specs, prefix, order);
  }
  piece.ts = push_forward(game, specs, image);
  piece.witness = f;
  return piece;
}

// Disjoint union of structures; offsets[p][j] is where piece p's types of
// player j start.
TypeStructure disjoint_union(const Game& game, const std::vector<Piece>& pieces,
                             std::vector<std::vector<int>>& offsets) {
  TypeStructure ts;
  ts.types.resize(game.num_players());
  ts.beliefs.resize(game.num_players());
  offsets.assign(pieces.size(), std::vector<int>(game.num_players(), 0));
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (int j = 0; j < game.num_players(); ++j) {
      offsets[p][j] = ts.num_types(j);
      for (const auto& name : pieces[p].ts.types[j]) ts.types[j].push_back(name);
    }
  }
  const auto counts = ts.type_counts();
  for (int i = 0; i < game.num_players(); ++i) {
    StateDomain to(game, counts, i);
    const auto& opp = to.opponents();
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      StateDomain from(game, pieces[p].ts.type_counts(), i);
      for (const Cps& src : pieces[p].ts.beliefs[i]) {
        Cps b = lifted_skeleton(game, counts, i);
        for (std::size_t k = 0; k < src.conditionals.size(); ++k) {
          for (int atom : support(src.conditionals[k])) {
            auto tt = from.types(atom);
            for (std::size_t q = 0; q < opp.size(); ++q) tt[q] += offsets[p][opp[q]];
            b.conditionals[k][to.encode(from.strategies(atom), tt)] += src.conditionals[k][atom];
          }
        }
        ts.beliefs[i].push_back(std::move(b));
      }
    }
  }
  return ts;
}

}  // namespace

Prop2Construction construct_prop2(const Game& game, const ProductSet& target, Quadrant quadrant,
                                  const Families& families) {
  if (target.empty()) throw Error(ErrorCode::kEmptyTarget, "the target must be nonempty");
  const SetFamily& family = quadrant.degenerate ? families.fsbrs : families.mfsbrs;
  const auto& per_player = quadrant.degenerate ? families.fsbrs_i : families.mfsbrs_i;
  const bool member = quadrant.common ? family.contains(target) : in_product(per_player, target);
  if (!member) {
    const std::string fam = quadrant.common ? (quadrant.degenerate ? "𝔉" : "𝕄")
                                            : (quadrant.degenerate ? "∏𝔉_j" : "∏𝕄_j");
    throw Error(ErrorCode::kTargetNotInFamily, "target is not in " + fam);
  }

  Prop2Construction out;
  const int n = game.num_players();
  if (quadrant.common) {
    Piece piece = build_piece(game, target, quadrant.degenerate, families, "");
    out.host = std::move(piece.ts);
    out.state.real = piece.real;
    for (int i = 0; i < n; ++i) {
      Closure cl;
      cl.owner = i;
      for (int j = 0; j < n; ++j) cl.types.push_back(full_set(out.host.num_types(j)));
      out.closures.push_back(std::move(cl));
    }
    if (!quadrant.degenerate && piece.witness == target) {
      out.notes.push_back("no strictly larger FSBRS contains the target; the imaginary type is idle");
    }
  } else {
    // One labeled copy per player, built from a family member whose
    // projection on that player is the target's component.
    std::vector<Piece> pieces;
    std::vector<ProductSet> sources;
    for (int i = 0; i < n; ++i) {
      const ProductSet* source = nullptr;
      for (const ProductSet& x : family.members) {
        if (!x.empty() && x[i] == target[i]) {
          source = &x;
          break;
        }
      }
      if (!source) throw Error(ErrorCode::kTargetNotInFamily, "no family member projects onto the target");
      sources.push_back(*source);
      pieces.push_back(build_piece(game, *source, quadrant.degenerate, families, game.player_name(i) + "|", i));
    }
    std::vector<std::vector<int>> offsets;
    out.host = disjoint_union(game, pieces, offsets);
    out.state.real.assign(n, {});
    for (int i = 0; i < n; ++i) {
      for (int t : pieces[i].real[i]) out.state.real[i].push_back(t + offsets[i][i]);
      Closure cl;
      cl.owner = i;
      for (int j = 0; j < n; ++j) {
        IndexSet set;
        for (int t = 0; t < pieces[i].ts.num_types(j); ++t) set.push_back(t + offsets[i][j]);
        cl.types.push_back(std::move(set));
      }
      out.closures.push_back(std::move(cl));
    }
    bool same = true;
    for (int i = 1; i < n; ++i) same = same && sources[i] == sources[0];
    if (same) out.notes.push_back("every copy is built from the same family member");
  }

  require_valid_type_structure(game, out.host);
  for (int i = 0; i < n; ++i) {
    out.profile.push_back(induce_separating_structure(game, out.host, out.state, out.closures[i]));
  }
  out.taxonomy = classify(game, out.profile);
  out.projection = real_rcsbr_profile(game, out.profile).projection;
  if (out.projection != target) {
    throw Error(ErrorCode::kVerificationFailed, "constructed state space does not reproduce the target");
  }
  if (out.taxonomy.common != quadrant.common) {
    throw Error(ErrorCode::kVerificationFailed, "constructed profile lands in the wrong column");
  }
  if (out.taxonomy.all_degenerate() != quadrant.degenerate) {
    out.notes.push_back("requested " + std::string(quadrant.degenerate ? "degenerate" : "non-degenerate") +
                        " but the construction is " + quadrant_name(out.taxonomy));
  }
  return out;
}

}  // namespace rcsbr
