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

#include "rcsbr/game.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "rcsbr/error.hpp"

namespace rcsbr {
namespace {

std::string join_strings(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace

int Game::player_index(std::string_view name) const {
  for (int i = 0; i < num_players(); ++i) {
    if (players_[i] == name) return i;
  }
  fail(ErrorCode::kUnknownPlayer, "no player named '" + std::string(name) + "'");
}

int Game::infoset_index(std::string_view id) const {
  for (std::size_t h = 0; h < infosets_.size(); ++h) {
    if (infosets_[h].id == id) return static_cast<int>(h);
  }
  fail(ErrorCode::kUnknownInfoSet, "no information set '" + std::string(id) + "'");
}

std::string Game::infoset_name(int h) const {
  if (h == kRoot) return "root";
  return infosets_.at(h).id;
}

int Game::strategy_index(int i, std::string_view label) const {
  const auto& ss = strategies_.at(i);
  for (std::size_t s = 0; s < ss.size(); ++s) {
    if (ss[s].label == label) return static_cast<int>(s);
  }
  fail(ErrorCode::kUnknownStrategy,
       "player '" + players_[i] + "' has no strategy '" + std::string(label) + "'");
}

const IndexSet& Game::allowing(int i, int h) const {
  if (h == kRoot) return all_strategies_.at(i);
  if (h < 0 || h >= static_cast<int>(infosets_.size())) {
    fail(ErrorCode::kUnknownInfoSet, "information set index " + std::to_string(h));
  }
  return allowing_.at(i)[h];
}

std::vector<int> Game::opponents(int i) const {
  std::vector<int> out;
  for (int j = 0; j < num_players(); ++j) {
    if (j != i) out.push_back(j);
  }
  return out;
}

std::vector<int> Game::decode_opponents(int i, int y) const {
  const auto opp = opponents(i);
  std::vector<int> out(opp.size());
  for (int k = static_cast<int>(opp.size()) - 1; k >= 0; --k) {
    const int r = num_strategies(opp[k]);
    out[k] = y % r;
    y /= r;
  }
  return out;
}

int Game::encode_opponents(int i, const std::vector<int>& strategies) const {
  const auto opp = opponents(i);
  int y = 0;
  for (std::size_t k = 0; k < opp.size(); ++k) y = y * num_strategies(opp[k]) + strategies[k];
  return y;
}

std::string Game::opponent_label(int i, int y) const {
  const auto opp = opponents(i);
  const auto s = decode_opponents(i, y);
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < opp.size(); ++k) parts.push_back(strategy_label(opp[k], s[k]));
  return join_strings(parts, ",");
}

IndexSet Game::opponent_event(int i, int h) const {
  IndexSet out;
  const auto opp = opponents(i);
  for (int y = 0; y < opp_size_.at(i); ++y) {
    const auto s = decode_opponents(i, y);
    bool ok = true;
    for (std::size_t k = 0; k < opp.size() && ok; ++k) ok = contains(allowing(opp[k], h), s[k]);
    if (ok) out.push_back(y);
  }
  return out;
}

int Game::event_of(int i, int h) const {
  if (h == kRoot) return 0;
  const InfoSet& set = infosets_.at(h);
  if (set.player != i) {
    fail(ErrorCode::kUnknownConditioningEvent,
         "information set '" + set.id + "' does not belong to player '" + players_[i] + "'");
  }
  return event_of_infoset_.at(i).at(local_index_.at(h));
}

int Game::event_by_name(int i, std::string_view name) const {
  const auto& fam = family_.at(i);
  for (std::size_t e = 0; e < fam.size(); ++e) {
    if (fam[e].id == name) return static_cast<int>(e);
  }
  if (name == "root") return 0;
  return event_of(i, infoset_index(name));
}

int Game::profile_index(const std::vector<int>& profile) const {
  int idx = 0;
  for (int j = 0; j < num_players(); ++j) idx = idx * num_strategies(j) + profile.at(j);
  return idx;
}

std::vector<int> Game::decode_profile(int index) const {
  std::vector<int> out(num_players());
  for (int j = num_players() - 1; j >= 0; --j) {
    out[j] = index % num_strategies(j);
    index /= num_strategies(j);
  }
  return out;
}

std::vector<int> Game::join(int i, int s_i, int y) const {
  const auto opp = opponents(i);
  const auto rest = decode_opponents(i, y);
  std::vector<int> profile(num_players());
  profile[i] = s_i;
  for (std::size_t k = 0; k < opp.size(); ++k) profile[opp[k]] = rest[k];
  return profile;
}

const std::vector<Rational>& Game::payoffs(const std::vector<int>& profile) const {
  return profile_payoffs_.at(profile_index(profile));
}

Game validate_game(const RawGame& raw) {
  const int n = static_cast<int>(raw.players.size());
  if (n < 2) fail(ErrorCode::kParseError, "a game needs at least two players");
  if (std::set<std::string>(raw.players.begin(), raw.players.end()).size() != raw.players.size()) {
    fail(ErrorCode::kParseError, "duplicate player name");
  }
  Game g;
  g.players_ = raw.players;

  const int num_nodes = static_cast<int>(raw.nodes.size());
  if (num_nodes == 0) fail(ErrorCode::kNotATree, "the game has no nodes");
  std::unordered_map<std::string, int> node_ix;
  for (int k = 0; k < num_nodes; ++k) {
    if (!node_ix.emplace(raw.nodes[k].id, k).second) {
      fail(ErrorCode::kParseError, "duplicate node id '" + raw.nodes[k].id + "'");
    }
  }
  g.nodes_.resize(num_nodes);
  for (int k = 0; k < num_nodes; ++k) {
    const RawNode& rn = raw.nodes[k];
    Node& node = g.nodes_[k];
    node.id = rn.id;
    node.infoset.assign(n, -1);
    const bool has_children = !rn.children.empty();
    if (has_children && rn.payoffs) {
      fail(ErrorCode::kNotATree, "node '" + rn.id + "' has both children and payoffs");
    }
    if (!has_children) {
      if (!rn.payoffs) fail(ErrorCode::kBadPayoffArity, "terminal node '" + rn.id + "' has no payoffs");
      if (static_cast<int>(rn.payoffs->size()) != n) {
        fail(ErrorCode::kBadPayoffArity, "terminal node '" + rn.id + "' lists " +
                                             std::to_string(rn.payoffs->size()) + " payoffs for " +
                                             std::to_string(n) + " players");
      }
      node.terminal = true;
      node.payoffs = *rn.payoffs;
    }
  }

  // Arborescence: unique parent, unique root, everything reachable.
  std::vector<int> parent_count(num_nodes, 0);
  std::vector<std::vector<std::pair<std::string, int>>> edges(num_nodes);
  for (int k = 0; k < num_nodes; ++k) {
    for (const auto& [key, child_id] : raw.nodes[k].children) {
      auto it = node_ix.find(child_id);
      if (it == node_ix.end()) {
        fail(ErrorCode::kDanglingChild,
             "node '" + raw.nodes[k].id + "' points to unknown node '" + child_id + "'");
      }
      if (++parent_count[it->second] > 1) {
        fail(ErrorCode::kNotATree, "node '" + child_id + "' has more than one parent");
      }
      edges[k].emplace_back(key, it->second);
    }
  }
  std::vector<int> roots;
  for (int k = 0; k < num_nodes; ++k) {
    if (parent_count[k] == 0) roots.push_back(k);
  }
  if (roots.size() != 1) {
    fail(ErrorCode::kNotATree, "expected exactly one root, found " + std::to_string(roots.size()));
  }
  g.root_ = roots[0];
  std::vector<int> order;  // breadth-first from the root
  {
    std::vector<bool> seen(num_nodes, false);
    std::deque<int> queue{g.root_};
    seen[g.root_] = true;
    while (!queue.empty()) {
      const int k = queue.front();
      queue.pop_front();
      order.push_back(k);
      for (const auto& e : edges[k]) {
        if (!seen[e.second]) {
          seen[e.second] = true;
          queue.push_back(e.second);
        }
      }
    }
    for (int k = 0; k < num_nodes; ++k) {
      if (!seen[k]) fail(ErrorCode::kNotATree, "node '" + g.nodes_[k].id + "' is not reachable from the root");
    }
  }

  // Information sets.
  std::set<std::string> infoset_ids;
  for (const RawInfoSet& ri : raw.infosets) {
    if (ri.id == "root") fail(ErrorCode::kParseError, "'root' is reserved");
    if (!infoset_ids.insert(ri.id).second) {
      fail(ErrorCode::kParseError, "duplicate information set id '" + ri.id + "'");
    }
    int p = -1;
    for (int j = 0; j < n; ++j) {
      if (raw.players[j] == ri.player) p = j;
    }
    if (p < 0) fail(ErrorCode::kUnknownPlayer, "information set '" + ri.id + "' names unknown player '" + ri.player + "'");
    if (ri.nodes.empty()) fail(ErrorCode::kParseError, "information set '" + ri.id + "' is empty");
    InfoSet set;
    set.id = ri.id;
    set.player = p;
    const int h = static_cast<int>(g.infosets_.size());
    for (const auto& nid : ri.nodes) {
      auto it = node_ix.find(nid);
      if (it == node_ix.end()) {
        fail(ErrorCode::kDanglingChild, "information set '" + ri.id + "' lists unknown node '" + nid + "'");
      }
      Node& node = g.nodes_[it->second];
      if (node.terminal) {
        fail(ErrorCode::kInfoSetActionMismatch, "information set '" + ri.id + "' contains terminal node '" + nid + "'");
      }
      if (node.infoset[p] != -1) {
        fail(ErrorCode::kInfoSetActionMismatch,
             "node '" + nid + "' lies in two information sets of player '" + ri.player + "'");
      }
      node.infoset[p] = h;
      set.nodes.push_back(it->second);
    }
    g.infosets_.push_back(std::move(set));
  }

  // Action lists; inactive players get the singleton pass action.
  for (int k = 0; k < num_nodes; ++k) {
    Node& node = g.nodes_[k];
    if (node.terminal) continue;
    const RawNode& rn = raw.nodes[k];
    node.actions.resize(n);
    for (int p = 0; p < n; ++p) {
      const auto& listed = p < static_cast<int>(rn.actions.size()) ? rn.actions[p] : std::nullopt;
      if (node.infoset[p] >= 0) {
        if (!listed || listed->empty()) {
          fail(ErrorCode::kEmptyActionSet, "player '" + raw.players[p] + "' has no actions at node '" + node.id + "'");
        }
        node.actions[p] = *listed;
      } else if (!listed) {
        node.actions[p] = {std::string(kPassAction)};
      } else if (listed->empty()) {
        fail(ErrorCode::kEmptyActionSet, "player '" + raw.players[p] + "' has no actions at node '" + node.id + "'");
      } else if (listed->size() > 1) {
        fail(ErrorCode::kInfoSetActionMismatch, "player '" + raw.players[p] + "' chooses at node '" + node.id +
                                                    "' outside any information set");
      } else {
        node.actions[p] = *listed;
      }
      if (std::set<std::string>(node.actions[p].begin(), node.actions[p].end()).size() != node.actions[p].size()) {
        fail(ErrorCode::kParseError, "duplicate action at node '" + node.id + "'");
      }
    }
  }

  // Child map, total and injective over the action profiles.
  for (int k = 0; k < num_nodes; ++k) {
    Node& node = g.nodes_[k];
    if (node.terminal) continue;
    std::vector<int> active;
    std::size_t total = 1;
    for (int p = 0; p < n; ++p) {
      if (node.infoset[p] >= 0) active.push_back(p);
      total *= node.actions[p].size();
    }
    node.children.assign(total, -1);
    for (const auto& [key, child] : edges[k]) {
      std::vector<int> profile(n, 0);
      const auto parts = active.empty() ? std::vector<std::string>{} : split(key, ',');
      bool ok = parts.size() == active.size() && (!active.empty() || key.empty());
      for (std::size_t a = 0; ok && a < active.size(); ++a) {
        const auto& acts = node.actions[active[a]];
        auto it = std::find(acts.begin(), acts.end(), parts[a]);
        if (it == acts.end()) {
          ok = false;
        } else {
          profile[active[a]] = static_cast<int>(it - acts.begin());
        }
      }
      if (!ok) {
        fail(ErrorCode::kDanglingChild, "node '" + node.id + "' has a child under unknown profile '" + key + "'");
      }
      int idx = 0;
      for (int p = 0; p < n; ++p) idx = idx * static_cast<int>(node.actions[p].size()) + profile[p];
      if (node.children[idx] != -1) {
        fail(ErrorCode::kParseError, "node '" + node.id + "' lists profile '" + key + "' twice");
      }
      node.children[idx] = child;
      g.nodes_[child].parent = k;
      g.nodes_[child].incoming = profile;
    }
    for (int c : node.children) {
      if (c == -1) fail(ErrorCode::kDanglingChild, "node '" + node.id + "' lacks a child for some action profile");
    }
  }

  // Perfect recall: same own experience at every node of a set. Checked
  // before action consistency so that merged decision points are reported
  // as a recall failure.
  using Experience = std::vector<std::pair<int, std::string>>;
  std::vector<std::vector<Experience>> exp(num_nodes, std::vector<Experience>(n));
  for (int k : order) {
    const Node& node = g.nodes_[k];
    if (node.parent < 0) continue;
    const Node& par = g.nodes_[node.parent];
    for (int p = 0; p < n; ++p) {
      exp[k][p] = exp[node.parent][p];
      if (par.infoset[p] >= 0) exp[k][p].emplace_back(par.infoset[p], par.actions[p][node.incoming[p]]);
    }
  }
  for (InfoSet& set : g.infosets_) {
    for (int x : set.nodes) {
      if (exp[x][set.player] != exp[set.nodes[0]][set.player]) {
        fail(ErrorCode::kPerfectRecallViolation,
             "nodes '" + g.nodes_[set.nodes[0]].id + "' and '" + g.nodes_[x].id + "' of information set '" +
                 set.id + "' follow different own histories");
      }
    }
  }
  for (InfoSet& set : g.infosets_) {
    set.actions = g.nodes_[set.nodes[0]].actions[set.player];
    for (int x : set.nodes) {
      if (g.nodes_[x].actions[set.player] != set.actions) {
        fail(ErrorCode::kInfoSetActionMismatch, "information set '" + set.id + "' has different actions at '" +
                                                    g.nodes_[set.nodes[0]].id + "' and '" + g.nodes_[x].id + "'");
      }
    }
  }

  // Own information sets and local indices.
  g.own_infosets_.assign(n, {});
  g.local_index_.assign(g.infosets_.size(), -1);
  for (std::size_t h = 0; h < g.infosets_.size(); ++h) {
    const int p = g.infosets_[h].player;
    g.local_index_[h] = static_cast<int>(g.own_infosets_[p].size());
    g.own_infosets_[p].push_back(static_cast<int>(h));
  }

  // Whether an own plan (indexed by local set) is compatible with the path
  // to node x. Unset entries (-1) never match.
  auto consistent = [&](int x, int p, const std::vector<int>& plan) {
    for (int y = x; g.nodes_[y].parent >= 0; y = g.nodes_[y].parent) {
      const Node& par = g.nodes_[g.nodes_[y].parent];
      const int h = par.infoset[p];
      if (h < 0) continue;
      if (plan[g.local_index_[h]] != g.nodes_[y].incoming[p]) return false;
    }
    return true;
  };

  g.standard_.assign(n, {});
  g.std_to_red_.assign(n, {});
  g.strategies_.assign(n, {});
  for (int p = 0; p < n; ++p) {
    const auto& own = g.own_infosets_[p];
    std::size_t count = 1;
    for (int h : own) count *= g.infosets_[h].actions.size();
    std::map<std::vector<int>, int> class_of;
    for (std::size_t c = 0; c < count; ++c) {
      StandardStrategy st;
      st.owner = p;
      st.choice.assign(own.size(), 0);
      std::size_t rest = c;
      for (int k = static_cast<int>(own.size()) - 1; k >= 0; --k) {
        const auto r = g.infosets_[own[k]].actions.size();
        st.choice[k] = static_cast<int>(rest % r);
        rest /= r;
      }
      std::vector<std::string> names;
      for (std::size_t k = 0; k < own.size(); ++k) names.push_back(g.infosets_[own[k]].actions[st.choice[k]]);
      st.label = own.empty() ? std::string(kPassAction) : join_strings(names, "-");
      // Reduced plan: keep choices at sets the strategy itself allows.
      std::vector<int> plan(own.size(), -1);
      for (std::size_t k = 0; k < own.size(); ++k) {
        if (consistent(g.infosets_[own[k]].nodes[0], p, st.choice)) plan[k] = st.choice[k];
      }
      auto [it, inserted] = class_of.emplace(plan, static_cast<int>(g.strategies_[p].size()));
      if (inserted) {
        Strategy red;
        red.owner = p;
        red.plan = plan;
        g.strategies_[p].push_back(std::move(red));
      }
      g.std_to_red_[p].push_back(it->second);
      g.standard_[p].push_back(std::move(st));
    }
    // Labels; fall back to set-qualified labels if plain ones collide.
    auto make_labels = [&](bool qualified) {
      std::set<std::string> seen;
      bool unique = true;
      for (Strategy& s : g.strategies_[p]) {
        std::vector<std::string> names;
        for (std::size_t k = 0; k < own.size(); ++k) {
          if (s.plan[k] < 0) continue;
          const InfoSet& set = g.infosets_[own[k]];
          names.push_back(qualified ? set.id + ":" + set.actions[s.plan[k]] : set.actions[s.plan[k]]);
        }
        s.label = names.empty() ? std::string(kPassAction) : join_strings(names, "-");
        unique = seen.insert(s.label).second && unique;
      }
      return unique;
    };
    if (!make_labels(false)) make_labels(true);
  }

  // S_i(h) for every player and every information set.
  g.all_strategies_.assign(n, {});
  g.allowing_.assign(n, std::vector<IndexSet>(g.infosets_.size()));
  for (int p = 0; p < n; ++p) {
    g.all_strategies_[p] = full_set(g.num_strategies(p));
    for (std::size_t h = 0; h < g.infosets_.size(); ++h) {
      for (int s = 0; s < g.num_strategies(p); ++s) {
        for (int x : g.infosets_[h].nodes) {
          if (consistent(x, p, g.strategies_[p][s].plan)) {
            g.allowing_[p][h].push_back(s);
            break;
          }
        }
      }
    }
  }

  g.opp_size_.assign(n, 1);
  for (int p = 0; p < n; ++p) {
    for (int j = 0; j < n; ++j) {
      if (j != p) g.opp_size_[p] *= g.num_strategies(j);
    }
  }

  g.family_.assign(n, {});
  g.event_of_infoset_.assign(n, {});
  for (int p = 0; p < n; ++p) {
    auto add = [&](int h) {
      IndexSet ev = g.opponent_event(p, h);
      auto& fam = g.family_[p];
      for (std::size_t e = 0; e < fam.size(); ++e) {
        if (fam[e].event == ev) {
          fam[e].generators.push_back(h);
          return static_cast<int>(e);
        }
      }
      fam.push_back({g.infoset_name(h), ev, {h}});
      return static_cast<int>(fam.size()) - 1;
    };
    add(kRoot);
    for (int h : g.own_infosets_[p]) g.event_of_infoset_[p].push_back(add(h));
  }

  // Payoffs of every reduced profile.
  g.num_profiles_ = 1;
  for (int p = 0; p < n; ++p) g.num_profiles_ *= g.num_strategies(p);
  g.profile_payoffs_.resize(g.num_profiles_);
  for (int idx = 0; idx < g.num_profiles_; ++idx) {
    const auto profile = g.decode_profile(idx);
    int x = g.root_;
    while (!g.nodes_[x].terminal) {
      const Node& node = g.nodes_[x];
      int child = 0;
      for (int p = 0; p < n; ++p) {
        int a = 0;
        if (node.infoset[p] >= 0) a = g.strategies_[p][profile[p]].plan[g.local_index_[node.infoset[p]]];
        child = child * static_cast<int>(node.actions[p].size()) + a;
      }
      x = node.children[child];
    }
    g.profile_payoffs_[idx] = g.nodes_[x].payoffs;
  }
  g.payoff_against_.assign(n, {});
  for (int p = 0; p < n; ++p) {
    auto& table = g.payoff_against_[p];
    table.reserve(static_cast<std::size_t>(g.num_strategies(p)) * g.opp_size_[p]);
    for (int s = 0; s < g.num_strategies(p); ++s) {
      for (int y = 0; y < g.opp_size_[p]; ++y) table.push_back(g.payoffs(g.join(p, s, y))[p]);
    }
  }

  g.static_ = true;
  for (const InfoSet& set : g.infosets_) {
    if (set.nodes.size() != 1 || set.nodes[0] != g.root_) g.static_ = false;
  }
  for (int c : g.nodes_[g.root_].children) {
    if (!g.nodes_[c].terminal) g.static_ = false;
  }
  return g;
}

std::vector<StandardStrategy> enumerate_standard_strategies(const Game& game, int i) {
  return game.standard_strategies(i);
}

std::vector<Strategy> reduce_strategies(const Game& game, int i) { return game.strategies(i); }

IndexSet strategies_allowing(const Game& game, int i, int h) { return game.allowing(i, h); }

std::vector<ConditioningEvent> conditioning_family(const Game& game, int i) {
  return game.conditioning_family(i);
}

IndexSet reachable_infosets(const Game& game, int i, int s_i, std::optional<int> only) {
  IndexSet out;
  for (std::size_t h = 0; h < game.infosets().size(); ++h) {
    if (only && game.infosets()[h].player != *only) continue;
    if (contains(game.allowing(i, static_cast<int>(h)), s_i)) out.push_back(static_cast<int>(h));
  }
  return out;
}

std::vector<Rational> payoff(const Game& game, const std::vector<int>& profile) {
  return game.payoffs(profile);
}

ProductSet::ProductSet(std::vector<IndexSet> p) : parts(std::move(p)) {
  bool any_empty = false;
  for (auto& part : parts) {
    part = make_set(std::move(part));
    any_empty = any_empty || part.empty();
  }
  if (any_empty) {
    for (auto& part : parts) part.clear();
  }
}

ProductSet ProductSet::empty_product(int num_players) {
  return ProductSet(std::vector<IndexSet>(num_players));
}

ProductSet ProductSet::full(const Game& game) {
  std::vector<IndexSet> parts;
  for (int j = 0; j < game.num_players(); ++j) parts.push_back(full_set(game.num_strategies(j)));
  return ProductSet(std::move(parts));
}

bool ProductSet::empty() const {
  return parts.empty() || parts[0].empty();
}

bool ProductSet::is_subset_of(const ProductSet& other) const {
  if (empty()) return true;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (!rcsbr::is_subset(parts[j], other.parts.at(j))) return false;
  }
  return true;
}

IndexSet ProductSet::opponents(const Game& game, int i) const {
  IndexSet out;
  if (empty()) return out;
  const auto opp = game.opponents(i);
  for (int y = 0; y < game.num_opponent_profiles(i); ++y) {
    const auto s = game.decode_opponents(i, y);
    bool ok = true;
    for (std::size_t k = 0; k < opp.size() && ok; ++k) ok = contains(parts[opp[k]], s[k]);
    if (ok) out.push_back(y);
  }
  return out;
}

}  // namespace rcsbr
