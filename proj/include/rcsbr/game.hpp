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

#ifndef RCSBR_GAME_HPP_
#define RCSBR_GAME_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcsbr/index_set.hpp"
#include "rcsbr/rational.hpp"

namespace rcsbr {

// Stands for the root history wherever an information set index is expected.
inline constexpr int kRoot = -1;

// The label given to the single action of a player who does not move.
inline constexpr std::string_view kPassAction = "pass";

// Unvalidated description, as read from a file.
struct RawNode {
  std::string id;
  // Indexed by player; nullopt when the file does not list the player.
  std::vector<std::optional<std::vector<std::string>>> actions;
  // Profile key ("In", or "U,L" for simultaneous moves) -> child id.
  std::vector<std::pair<std::string, std::string>> children;
  std::optional<std::vector<Rational>> payoffs;
};

struct RawInfoSet {
  std::string id;
  std::string player;
  std::vector<std::string> nodes;
};

struct RawGame {
  std::vector<std::string> players;
  std::vector<RawNode> nodes;
  std::vector<RawInfoSet> infosets;
};

struct Node {
  std::string id;
  int parent = -1;
  // Action index per player on the edge from the parent.
  std::vector<int> incoming;
  bool terminal = false;
  std::vector<Rational> payoffs;
  std::vector<std::vector<std::string>> actions;  // per player
  std::vector<int> infoset;                        // per player, -1 if inactive
  std::vector<int> children;  // by action profile, player 0 most significant
};

struct InfoSet {
  std::string id;
  int player = 0;
  std::vector<int> nodes;
  std::vector<std::string> actions;
};

struct StandardStrategy {
  int owner = 0;
  std::vector<int> choice;  // per own information set
  std::string label;
};

// A reduced strategy: a class of behaviorally equivalent standard strategies.
struct Strategy {
  int owner = 0;
  std::vector<int> plan;  // per own information set; -1 where precluded
  std::string label;
};

struct ConditioningEvent {
  std::string id;
  IndexSet event;               // subset of opponent profiles
  std::vector<int> generators;  // information sets (or kRoot) inducing it
};

class Game {
 public:
  int num_players() const { return static_cast<int>(players_.size()); }
  const std::vector<std::string>& players() const { return players_; }
  const std::string& player_name(int i) const { return players_.at(i); }
  int player_index(std::string_view name) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  const std::vector<InfoSet>& infosets() const { return infosets_; }
  int infoset_index(std::string_view id) const;
  // "root" for kRoot.
  std::string infoset_name(int h) const;
  const std::vector<int>& own_infosets(int i) const { return own_infosets_.at(i); }

  const std::vector<StandardStrategy>& standard_strategies(int i) const {
    return standard_.at(i);
  }
  const std::vector<int>& standard_to_reduced(int i) const { return std_to_red_.at(i); }
  const std::vector<Strategy>& strategies(int i) const { return strategies_.at(i); }
  int num_strategies(int i) const { return static_cast<int>(strategies_.at(i).size()); }
  int strategy_index(int i, std::string_view label) const;
  const std::string& strategy_label(int i, int s) const { return strategies_.at(i).at(s).label; }

  // S_i(h) for any information set h, or S_i for kRoot.
  const IndexSet& allowing(int i, int h) const;

  // Opponent profiles S_{-i}: strategies of j != i in ascending j, first
  // opponent most significant.
  int num_opponent_profiles(int i) const { return opp_size_.at(i); }
  std::vector<int> opponents(int i) const;
  std::vector<int> decode_opponents(int i, int y) const;
  int encode_opponents(int i, const std::vector<int>& strategies) const;
  std::string opponent_label(int i, int y) const;
  // S_{-i}(h).
  IndexSet opponent_event(int i, int h) const;

  // H_i^∅ mapped to events: root first, deduplicated by content.
  const std::vector<ConditioningEvent>& conditioning_family(int i) const {
    return family_.at(i);
  }
  // Index into conditioning_family(i) of S_{-i}(h), h an own set or kRoot.
  int event_of(int i, int h) const;
  // Index of the event with the given id, or of the event generated by the
  // given information-set id. Throws kUnknownConditioningEvent.
  int event_by_name(int i, std::string_view name) const;

  int num_profiles() const { return num_profiles_; }
  int profile_index(const std::vector<int>& profile) const;
  std::vector<int> decode_profile(int index) const;
  std::vector<int> join(int i, int s_i, int y) const;
  const std::vector<Rational>& payoffs(const std::vector<int>& profile) const;
  // u_i(s_i, y) with y an opponent profile index.
  const Rational& payoff_against(int i, int s_i, int y) const {
    return payoff_against_[i][static_cast<std::size_t>(s_i) * opp_size_[i] + y];
  }

  // Every information set contains only the root and play ends after it.
  bool is_static() const { return static_; }

 private:
  friend Game validate_game(const RawGame& raw);

  std::vector<std::string> players_;
  std::vector<Node> nodes_;
  int root_ = 0;
  std::vector<InfoSet> infosets_;
  std::vector<std::vector<int>> own_infosets_;
  std::vector<int> local_index_;  // global information set -> owner's local index
  std::vector<std::vector<StandardStrategy>> standard_;
  std::vector<std::vector<int>> std_to_red_;
  std::vector<std::vector<Strategy>> strategies_;
  std::vector<std::vector<IndexSet>> allowing_;  // [i][h]
  std::vector<IndexSet> all_strategies_;         // [i]
  std::vector<int> opp_size_;
  std::vector<std::vector<ConditioningEvent>> family_;
  std::vector<std::vector<int>> event_of_infoset_;  // [i][local own index]
  int num_profiles_ = 0;
  std::vector<std::vector<Rational>> profile_payoffs_;
  std::vector<std::vector<Rational>> payoff_against_;
  bool static_ = false;
};

// Checks every structural invariant and derives strategies and events.
// Errors: NotATree, DanglingChild, InfoSetActionMismatch,
// PerfectRecallViolation, EmptyActionSet, BadPayoffArity.
Game validate_game(const RawGame& raw);

std::vector<StandardStrategy> enumerate_standard_strategies(const Game& game, int i);
std::vector<Strategy> reduce_strategies(const Game& game, int i);
// S_i(h); throws kUnknownInfoSet for an out-of-range h.
IndexSet strategies_allowing(const Game& game, int i, int h);
std::vector<ConditioningEvent> conditioning_family(const Game& game, int i);
// H(s_i) as information-set indices; with `only`, restricted to that
// player's sets. The root is not an information set and is not listed.
IndexSet reachable_infosets(const Game& game, int i, int s_i,
                            std::optional<int> only = std::nullopt);
std::vector<Rational> payoff(const Game& game, const std::vector<int>& profile);

// Per-player subsets of S_j. Any empty component makes the whole product
// empty, so canonical empty products have every component empty.
struct ProductSet {
  std::vector<IndexSet> parts;

  ProductSet() = default;
  explicit ProductSet(std::vector<IndexSet> p);
  static ProductSet empty_product(int num_players);
  static ProductSet full(const Game& game);

  bool empty() const;
  const IndexSet& operator[](int i) const { return parts.at(i); }
  bool is_subset_of(const ProductSet& other) const;
  // F_{-i} as a set of opponent profile indices of `game`.
  IndexSet opponents(const Game& game, int i) const;

  friend bool operator==(const ProductSet& a, const ProductSet& b) { return a.parts == b.parts; }
  friend bool operator<(const ProductSet& a, const ProductSet& b) { return a.parts < b.parts; }
};

}  // namespace rcsbr

#endif  // RCSBR_GAME_HPP_
