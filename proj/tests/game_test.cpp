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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"

namespace rcsbr {
namespace {

using testing::load;
using testing::set_of;

ErrorCode validation_error(const std::string& text) {
  try {
    game_from_json(parse_json(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorCode::kParseError;
}

// Follows a standard-strategy profile down the tree and returns the nodes
// visited, root first.
std::vector<int> play(const Game& game, const std::vector<std::vector<int>>& choice) {
  std::vector<int> path{game.root()};
  while (!game.nodes()[path.back()].terminal) {
    const Node& node = game.nodes()[path.back()];
    int index = 0;
    for (int p = 0; p < game.num_players(); ++p) {
      int a = 0;
      if (node.infoset[p] >= 0) {
        const auto& own = game.own_infosets(p);
        const int local = static_cast<int>(std::find(own.begin(), own.end(), node.infoset[p]) - own.begin());
        a = choice[p][local];
      }
      index = index * static_cast<int>(node.actions[p].size()) + a;
    }
    path.push_back(node.children[index]);
  }
  return path;
}

std::vector<std::vector<int>> standard_profile(const Game& game, int index) {
  std::vector<std::vector<int>> out(game.num_players());
  for (int p = game.num_players() - 1; p >= 0; --p) {
    const int n = static_cast<int>(game.standard_strategies(p).size());
    out[p] = game.standard_strategies(p)[index % n].choice;
    index /= n;
  }
  return out;
}

int num_standard_profiles(const Game& game) {
  int n = 1;
  for (int p = 0; p < game.num_players(); ++p) n *= static_cast<int>(game.standard_strategies(p).size());
  return n;
}

std::vector<int> reduced_of(const Game& game, int standard_index) {
  std::vector<int> out(game.num_players());
  for (int p = game.num_players() - 1; p >= 0; --p) {
    const int n = static_cast<int>(game.standard_strategies(p).size());
    out[p] = game.standard_to_reduced(p)[standard_index % n];
    standard_index /= n;
  }
  return out;
}

TEST(GameTest, CentipedeValidates) {
  const Game g = load("centipede.game.json");
  EXPECT_EQ(g.num_players(), 2);
  EXPECT_EQ(g.own_infosets(0).size(), 2u);
  EXPECT_EQ(g.own_infosets(1).size(), 1u);
  EXPECT_FALSE(g.is_static());
}

TEST(GameTest, StaticGameHasOnlyTheRoot) {
  const Game g = load("static3x3.game.json");
  EXPECT_TRUE(g.is_static());
  for (int i = 0; i < 2; ++i) {
    ASSERT_EQ(g.conditioning_family(i).size(), 1u);
    EXPECT_EQ(g.conditioning_family(i)[0].id, "root");
    EXPECT_EQ(g.conditioning_family(i)[0].event, full_set(3));
  }
}

TEST(GameTest, MergedDecisionNodesBreakRecall) {
  try {
    load("broken_recall.game.json");
    FAIL() << "expected PerfectRecallViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPerfectRecallViolation);
  }
}

TEST(GameTest, StructuralErrors) {
  // Two roots.
  EXPECT_EQ(validation_error(R"({"players":["a","b"],"nodes":{
      "r":{"actions":{"a":["x","y"]},"children":{"x":"t1","y":"t2"}},
      "t1":{"payoffs":["0","0"]},"t2":{"payoffs":["0","0"]},"lost":{"payoffs":["1","1"]}},
      "infosets":{"h":{"player":"a","nodes":["r"]}}})"),
            ErrorCode::kNotATree);
  // A child that does not exist.
  EXPECT_EQ(validation_error(R"({"players":["a","b"],"nodes":{
      "r":{"actions":{"a":["x","y"]},"children":{"x":"t1","y":"nowhere"}},
      "t1":{"payoffs":["0","0"]}},
      "infosets":{"h":{"player":"a","nodes":["r"]}}})"),
            ErrorCode::kDanglingChild);
  // A missing action profile.
  EXPECT_EQ(validation_error(R"({"players":["a","b"],"nodes":{
      "r":{"actions":{"a":["x","y"]},"children":{"x":"t1"}},
      "t1":{"payoffs":["0","0"]}},
      "infosets":{"h":{"player":"a","nodes":["r"]}}})"),
            ErrorCode::kDanglingChild);
  // Same information set, different actions.
  EXPECT_EQ(validation_error(R"({"players":["a","b"],"nodes":{
      "r":{"actions":{"b":["l","r"]},"children":{"l":"x1","r":"x2"}},
      "x1":{"actions":{"a":["u","d"]},"children":{"u":"t1","d":"t2"}},
      "x2":{"actions":{"a":["u","m"]},"children":{"u":"t3","m":"t4"}},
      "t1":{"payoffs":["0","0"]},"t2":{"payoffs":["0","0"]},
      "t3":{"payoffs":["0","0"]},"t4":{"payoffs":["0","0"]}},
      "infosets":{"hb":{"player":"b","nodes":["r"]},"ha":{"player":"a","nodes":["x1","x2"]}}})"),
            ErrorCode::kInfoSetActionMismatch);
  // An active player without actions.
  EXPECT_EQ(validation_error(R"({"players":["a","b"],"nodes":{
      "r":{"actions":{"a":[]},"children":{"x":"t"}},"t":{"payoffs":["0","0"]}},
      "infosets":{"h":{"player":"a","nodes":["r"]}}})"),
            ErrorCode::kEmptyActionSet);
  // Wrong number of payoffs.
  EXPECT_EQ(validation_error(R"({"players":["a","b"],"nodes":{
      "r":{"actions":{"a":["x"]},"children":{"x":"t"}},
      "t":{"payoffs":["1"]}},
      "infosets":{"h":{"player":"a","nodes":["r"]}}})"),
            ErrorCode::kBadPayoffArity);
}

TEST(GameTest, StandardStrategyCounts) {
  const Game c = load("centipede.game.json");
  EXPECT_EQ(enumerate_standard_strategies(c, 0).size(), 4u);
  EXPECT_EQ(enumerate_standard_strategies(c, 1).size(), 2u);
  const Game s = load("static3x3.game.json");
  EXPECT_EQ(enumerate_standard_strategies(s, 0).size(), 3u);
}

TEST(GameTest, ReducedStrategies) {
  const Game c = load("centipede.game.json");
  std::vector<std::string> ann, bob;
  for (const auto& s : reduce_strategies(c, 0)) ann.push_back(s.label);
  for (const auto& s : reduce_strategies(c, 1)) bob.push_back(s.label);
  EXPECT_EQ(ann, (std::vector<std::string>{"Out", "In-Down", "In-Across"}));
  EXPECT_EQ(bob, (std::vector<std::string>{"Stop", "Go"}));
  // Both Out.* standard strategies land in the Out class.
  int out_class = 0;
  for (int r : c.standard_to_reduced(0)) out_class += (r == c.strategy_index(0, "Out"));
  EXPECT_EQ(out_class, 2);

  const Game s = load("static3x3.game.json");
  EXPECT_EQ(reduce_strategies(s, 0).size(), 3u);
  EXPECT_EQ(reduce_strategies(s, 1).size(), 3u);
}

TEST(GameTest, StrategiesAllowing) {
  const Game g = load("centipede.game.json");
  const int in_go = g.infoset_index("a.InGo");
  EXPECT_EQ(strategies_allowing(g, 0, in_go), set_of(g, 0, {"In-Down", "In-Across"}));
  EXPECT_EQ(strategies_allowing(g, 1, in_go), set_of(g, 1, {"Go"}));
  EXPECT_EQ(strategies_allowing(g, 0, kRoot), full_set(3));
  EXPECT_EQ(strategies_allowing(g, 1, kRoot), full_set(2));
  try {
    strategies_allowing(g, 0, 17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownInfoSet);
  }
}

TEST(GameTest, ConditioningFamilies) {
  const Game g = load("centipede.game.json");
  const auto ann = conditioning_family(g, 0);
  ASSERT_EQ(ann.size(), 2u);
  EXPECT_EQ(ann[0].event, full_set(2));
  EXPECT_EQ(ann[1].event, set_of(g, 1, {"Go"}));
  EXPECT_EQ(ann[1].id, "a.InGo");
  const auto bob = conditioning_family(g, 1);
  ASSERT_EQ(bob.size(), 2u);
  EXPECT_EQ(bob[0].event, full_set(3));
  EXPECT_EQ(bob[1].event, set_of(g, 0, {"In-Down", "In-Across"}));
  // Ann's root information set generates the root event, not a new one.
  EXPECT_EQ(g.event_of(0, g.infoset_index("a.root")), 0);
}

TEST(GameTest, ReachableInfosets) {
  const Game g = load("centipede.game.json");
  const int a_root = g.infoset_index("a.root"), in_go = g.infoset_index("a.InGo"), b_in = g.infoset_index("b.In");
  EXPECT_EQ(reachable_infosets(g, 0, g.strategy_index(0, "Out"), 0), IndexSet{a_root});
  EXPECT_EQ(reachable_infosets(g, 0, g.strategy_index(0, "In-Across"), 0), make_set({a_root, in_go}));
  EXPECT_EQ(reachable_infosets(g, 1, g.strategy_index(1, "Stop")), make_set({a_root, b_in}));
}

TEST(GameTest, Payoffs) {
  const Game c = load("centipede.game.json");
  EXPECT_EQ(payoff(c, {c.strategy_index(0, "Out"), c.strategy_index(1, "Stop")}),
            (std::vector<Rational>{2, 2}));
  EXPECT_EQ(payoff(c, {c.strategy_index(0, "In-Across"), c.strategy_index(1, "Go")}),
            (std::vector<Rational>{3, 3}));
  const Game s = load("static3x3.game.json");
  EXPECT_EQ(payoff(s, {s.strategy_index(0, "U"), s.strategy_index(1, "C")}), (std::vector<Rational>{2, 1}));
}

// S(h) = S_i(h) × S_{-i}(h): the reduced profiles reaching h are exactly
// the product of what each player allows.
TEST(GameProperty, ProductIdentity) {
  for (const auto& name : testing::fixture_games()) {
    const Game g = load(name);
    for (int h = 0; h < static_cast<int>(g.infosets().size()); ++h) {
      std::set<int> reaching;
      for (int k = 0; k < num_standard_profiles(g); ++k) {
        const auto path = play(g, standard_profile(g, k));
        const auto& nodes = g.infosets()[h].nodes;
        if (std::any_of(path.begin(), path.end(), [&](int x) { return contains(make_set(nodes), x); })) {
          reaching.insert(g.profile_index(reduced_of(g, k)));
        }
      }
      std::set<int> product;
      for (int p = 0; p < g.num_profiles(); ++p) {
        const auto s = g.decode_profile(p);
        bool in = true;
        for (int i = 0; i < g.num_players(); ++i) in = in && contains(g.allowing(i, h), s[i]);
        if (in) product.insert(p);
      }
      EXPECT_EQ(reaching, product) << name << " " << g.infosets()[h].id;
    }
  }
}

TEST(GameProperty, ReductionPartitionsStandardStrategies) {
  for (const auto& name : testing::fixture_games()) {
    const Game g = load(name);
    for (int i = 0; i < g.num_players(); ++i) {
      const auto& standard = g.standard_strategies(i);
      std::vector<int> class_size(g.num_strategies(i), 0);
      for (std::size_t k = 0; k < standard.size(); ++k) {
        const int r = g.standard_to_reduced(i)[k];
        ASSERT_GE(r, 0);
        ++class_size[r];
        const Strategy& s = g.strategies(i)[r];
        for (std::size_t h = 0; h < s.plan.size(); ++h) {
          if (s.plan[h] >= 0) EXPECT_EQ(s.plan[h], standard[k].choice[h]);
        }
      }
      for (int c : class_size) EXPECT_GT(c, 0);
    }
  }
}

TEST(GameProperty, PayoffDoesNotDependOnRepresentative) {
  for (const auto& name : testing::fixture_games()) {
    const Game g = load(name);
    for (int k = 0; k < num_standard_profiles(g); ++k) {
      const auto path = play(g, standard_profile(g, k));
      EXPECT_EQ(g.nodes()[path.back()].payoffs, payoff(g, reduced_of(g, k))) << name;
    }
  }
}

TEST(GameProperty, DeterministicEnumeration) {
  for (const auto& name : testing::fixture_games()) {
    const Game a = load(name), b = load(name);
    EXPECT_EQ(game_to_json(a).dump(), game_to_json(b).dump());
    for (int i = 0; i < a.num_players(); ++i) {
      for (int s = 0; s < a.num_strategies(i); ++s) EXPECT_EQ(a.strategy_label(i, s), b.strategy_label(i, s));
    }
  }
}

TEST(GameTest, SimultaneousLabelsAndPass) {
  const Game g = load("bos_outside.game.json");
  std::vector<std::string> ann, bob;
  for (const auto& s : g.strategies(0)) ann.push_back(s.label);
  for (const auto& s : g.strategies(1)) bob.push_back(s.label);
  EXPECT_EQ(ann, (std::vector<std::string>{"Out", "In-B", "In-S"}));
  EXPECT_EQ(bob, (std::vector<std::string>{"B", "S"}));
  // Bob does not move at the root.
  EXPECT_EQ(g.nodes()[g.root()].actions[1], std::vector<std::string>{std::string(kPassAction)});
}

}  // namespace
}  // namespace rcsbr
