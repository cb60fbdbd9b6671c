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

#include <random>

#include "helpers.hpp"
#include "rcsbr/random.hpp"

namespace rcsbr {
namespace {

using testing::load;
using testing::pairs;
using testing::product;
using testing::set_of;

class TwoTypeCentipede : public ::testing::Test {
 protected:
  TwoTypeCentipede() : g(load("centipede.game.json")), ts(load_type_structure(g, oracle::fixture("table1.ts.json"))) {}

  // Opponent event for player i built from the other player's pairs.
  IndexSet opp(int i, const std::vector<std::pair<std::string, std::string>>& items) const {
    EventProfile e(2);
    e[1 - i] = pairs(g, ts, 1 - i, items);
    return opponent_event(g, ts, i, e);
  }

  Game g;
  TypeStructure ts;
};

TEST_F(TwoTypeCentipede, Validates) {
  const auto report = validate_type_structure(g, ts);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.warnings.empty());
}

TEST_F(TwoTypeCentipede, SelfMassViolation) {
  TypeStructure bad = ts;
  StateDomain dom(g, bad.type_counts(), 0);
  Measure& m = bad.beliefs[0][0].conditionals[1];
  std::fill(m.begin(), m.end(), 0);
  m[dom.encode({g.strategy_index(1, "Stop")}, {0})] = 1;
  const auto report = validate_type_structure(g, bad);
  ASSERT_EQ(report.issues.size(), 1u);
  EXPECT_EQ(report.issues[0].player, 0);
  EXPECT_EQ(report.issues[0].type, 0);
  EXPECT_EQ(report.issues[0].violation.code, ErrorCode::kSelfMassNotOne);
  try {
    require_valid_type_structure(g, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSelfMassNotOne);
  }
}

TEST_F(TwoTypeCentipede, DuplicateBeliefsWarnOnly) {
  TypeStructure dup = ts;
  dup.beliefs[1][1] = dup.beliefs[1][0];
  const auto report = validate_type_structure(g, dup);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.warnings.size(), 1u);
}

TEST_F(TwoTypeCentipede, FirstOrderBeliefs) {
  const Cps ta2 = first_order_cps(g, ts, 0, ts.type_index(0, "t'_a"));
  EXPECT_EQ(ta2.conditionals[0], dirac(2, g.strategy_index(1, "Stop")));
  EXPECT_EQ(ta2.conditionals[1], dirac(2, g.strategy_index(1, "Go")));
  const Cps tb = first_order_cps(g, ts, 1, ts.type_index(1, "t_b"));
  EXPECT_EQ(tb.conditionals[0], dirac(3, g.strategy_index(0, "Out")));
  EXPECT_EQ(tb.conditionals[1], dirac(3, g.strategy_index(0, "In-Down")));
  for (int i = 0; i < 2; ++i) {
    for (int t = 0; t < ts.num_types(i); ++t) EXPECT_FALSE(validate_cps(first_order_cps(g, ts, i, t)));
  }
}

TEST_F(TwoTypeCentipede, BelOperator) {
  const IndexSet e = opp(1, {{"Out", "t'_a"}, {"In-Down", "t'_a"}});
  const Event believers = bel(g, ts, 1, 0, e);
  Event expected;
  for (int s = 0; s < 2; ++s) expected.push_back(pair_code(ts, 1, s, ts.type_index(1, "t_b")));
  EXPECT_EQ(believers, make_set(expected));
  StateDomain dom(g, ts.type_counts(), 1);
  EXPECT_EQ(bel(g, ts, 1, 0, full_set(dom.size())), full_set(2 * ts.num_types(1)));
  EXPECT_TRUE(bel(g, ts, 1, 0, {}).empty());
}

TEST_F(TwoTypeCentipede, SbOperator) {
  const EventProfile r = rat(g, ts);
  EventProfile only_b(2);
  only_b[1] = r[1];
  const Event sb_a = sb(g, ts, 0, opponent_event(g, ts, 0, only_b));
  Event expected;
  for (int s = 0; s < 3; ++s) expected.push_back(pair_code(ts, 0, s, ts.type_index(0, "t_a")));
  EXPECT_EQ(sb_a, make_set(expected));
  EXPECT_TRUE(sb(g, ts, 0, {}).empty());
}

TEST_F(TwoTypeCentipede, SbIsNotMonotone) {
  // t'_a strongly believes {(Stop,t_b)} but not the larger
  // {(Stop,t_b),(Go,t'_b)}: the larger event reaches ⟨In,Go⟩.
  const int t2 = ts.type_index(0, "t'_a");
  const Event small = sb(g, ts, 0, opp(0, {{"Stop", "t_b"}}));
  const Event large = sb(g, ts, 0, opp(0, {{"Stop", "t_b"}, {"Go", "t'_b"}}));
  EXPECT_TRUE(contains(small, pair_code(ts, 0, 0, t2)));
  EXPECT_FALSE(contains(large, pair_code(ts, 0, 0, t2)));
}

TEST_F(TwoTypeCentipede, Rationality) {
  const EventProfile r = rat(g, ts);
  EXPECT_EQ(r[0], pairs(g, ts, 0, {{"In-Across", "t_a"}, {"Out", "t'_a"}}));
  EXPECT_EQ(r[1], pairs(g, ts, 1, {{"Stop", "t_b"}, {"Go", "t'_b"}}));
}

TEST_F(TwoTypeCentipede, Rcsbr) {
  const CsbSequence seq = csb_sequence(g, ts);
  EXPECT_EQ(seq.steps[0], rat(g, ts));
  EXPECT_EQ(csb(g, ts, 1), seq.limit);
  EXPECT_EQ(seq.limit[0], pairs(g, ts, 0, {{"In-Across", "t_a"}}));
  EXPECT_EQ(seq.limit[1], pairs(g, ts, 1, {{"Go", "t'_b"}}));
  EXPECT_EQ(rcsbr(g, ts), seq.limit);
}

TEST_F(TwoTypeCentipede, ProjectionIsFsbrs) {
  const TheoremReport report = check_theorem_bf(g, ts);
  EXPECT_EQ(report.projection, product(g, {{"In-Across"}, {"Go"}}));
  EXPECT_TRUE(report.verdict.holds);
}

TEST(Epistemic, AllStrategiesTieForIndifferentType) {
  // Against a uniform belief over Bob's columns every row pays 1.
  const Game g = load("static3x3.game.json");
  TypeStructure ts;
  ts.types = {{"t_a"}, {"t_b"}};
  ts.beliefs.resize(2);
  StateDomain dom_a(g, {1, 1}, 0), dom_b(g, {1, 1}, 1);
  Cps a = lifted_skeleton(g, {1, 1}, 0), b = lifted_skeleton(g, {1, 1}, 1);
  a.conditionals[0] = uniform_on(dom_a.size(), full_set(dom_a.size()));
  b.conditionals[0] = dirac(dom_b.size(), dom_b.encode({g.strategy_index(0, "U")}, {0}));
  ts.beliefs[0].push_back(a);
  ts.beliefs[1].push_back(b);
  EXPECT_EQ(rat(g, ts)[0], full_set(3));
}

TEST(Epistemic, EmptyEventsProjectToEmptyProduct) {
  const Game g = load("centipede.game.json");
  const TypeStructure ts = load_type_structure(g, oracle::fixture("table1.ts.json"));
  EventProfile half = rat(g, ts);
  half[1].clear();
  EXPECT_EQ(project(g, ts, half), ProductSet::empty_product(2));
  EXPECT_TRUE(is_fsbrs(g, project(g, ts, half)).holds);
}

TEST(Epistemic, SharedImaginaryType) {
  const Game g = load("centipede.game.json");
  const TypeStructure ts = load_type_structure(g, oracle::fixture("table3.ts.json"));
  EXPECT_TRUE(validate_type_structure(g, ts).ok());
  const EventProfile r = rat(g, ts);
  EXPECT_EQ(r[0], pairs(g, ts, 0, {{"Out", "t♥_a"}}));
  EXPECT_EQ(r[1], pairs(g, ts, 1, {{"Go", "t♥_b"}, {"Stop", "t♠_b"}}));
  EXPECT_EQ(rcsbr(g, ts), r);
  EXPECT_EQ(csb_sequence(g, ts).steps.size(), 1u);
}

TEST(Epistemic, StaticRcbr) {
  const Game g = load("static3x3.game.json");
  const TypeStructure ts = load_type_structure(g, oracle::fixture("static3x3.ts.json"));
  const EventProfile e = rcbr(g, ts);
  EXPECT_EQ(e[0], pairs(g, ts, 0, {{"U", "t♥_a"}, {"M", "t♠_a"}, {"D", "t'♠_a"}}));
  EXPECT_EQ(e[1], pairs(g, ts, 1, {{"L", "t♠_b"}, {"C", "t'♠_b"}, {"R", "t♥_b"}}));
  EXPECT_EQ(rcsbr(g, ts), e);
}

TEST(Epistemic, RcbrShrinksWhenAnIrrationalTypeIsBelieved) {
  // Bob's only type believes Ann plays D; Ann's only type believes Bob plays
  // C, so she plays U and Bob's belief in her rationality fails.
  const Game g = load("static3x3.game.json");
  const TypeStructure ts = type_structure_from_json(g, parse_json(R"({
    "a": {"types": ["x"], "beliefs": {"x": {"root": [{"s": ["C"], "t": ["y"], "p": "1/1"}]}}},
    "b": {"types": ["y"], "beliefs": {"y": {"root": [{"s": ["D"], "t": ["x"], "p": "1/1"}]}}}})"));
  const CsbSequence seq = rcbr_sequence(g, ts);
  EXPECT_GT(seq.steps.size(), 1u);
  EXPECT_FALSE(seq.steps[0][1].empty());
  EXPECT_TRUE(seq.limit[1].empty());
}

TEST(Epistemic, RcbrRejectsDynamicGames) {
  const Game g = load("centipede.game.json");
  const TypeStructure ts = load_type_structure(g, oracle::fixture("table1.ts.json"));
  try {
    rcbr(g, ts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotStatic);
  }
}

TEST(EpistemicProperty, RcbrEqualsRcsbrOnStaticGames) {
  std::mt19937_64 rng(17);
  for (const auto& name : {"static3x3.game.json", "three_player.game.json"}) {
    const Game g = load(name);
    for (int k = 0; k < 40; ++k) {
      const TypeStructure ts = random_type_structure(g, rng);
      const CsbSequence seq = rcbr_sequence(g, ts);
      bool nonempty = true;
      for (const auto& step : seq.steps) {
        for (const auto& e : step) nonempty = nonempty && !e.empty();
      }
      if (nonempty) EXPECT_EQ(seq.limit, rcsbr(g, ts)) << name;
    }
  }
}

TEST(EpistemicProperty, ProjectionIsFsbrsOnRandomStructures) {
  std::mt19937_64 rng(19);
  for (const auto& name : testing::fixture_games()) {
    const Game g = load(name);
    for (int k = 0; k < 50; ++k) {
      const TypeStructure ts = random_type_structure(g, rng);
      ASSERT_TRUE(validate_type_structure(g, ts).ok());
      EXPECT_TRUE(check_theorem_bf(g, ts).verdict.holds) << name;
    }
  }
}

TEST(EpistemicProperty, CsbDecreasesAndBelIsMonotone) {
  std::mt19937_64 rng(23);
  const Game g = load("centipede.game.json");
  for (int k = 0; k < 30; ++k) {
    const TypeStructure ts = random_type_structure(g, rng);
    const CsbSequence seq = csb_sequence(g, ts);
    int bound = 0;
    for (int i = 0; i < 2; ++i) bound += g.num_strategies(i) * ts.num_types(i);
    EXPECT_LE(static_cast<int>(seq.steps.size()), bound + 1);
    for (std::size_t m = 1; m < seq.steps.size(); ++m) {
      for (int i = 0; i < 2; ++i) EXPECT_TRUE(is_subset(seq.steps[m][i], seq.steps[m - 1][i]));
    }
    for (int i = 0; i < 2; ++i) {
      StateDomain dom(g, ts.type_counts(), i);
      IndexSet e, f;
      for (int atom = 0; atom < dom.size(); ++atom) {
        const auto r = rng() % 3;
        if (r == 0) e.push_back(atom);
        if (r != 2) f.push_back(atom);
      }
      for (int ev = 0; ev < static_cast<int>(g.conditioning_family(i).size()); ++ev) {
        EXPECT_TRUE(is_subset(bel(g, ts, i, ev, e), bel(g, ts, i, ev, f)));
      }
    }
  }
}

TEST(Constructor, CentipedeMembers) {
  const Game g = load("centipede.game.json");
  const ProductSet f = product(g, {{"Out"}, {"Stop", "Go"}});
  const TypeStructure ts = construct_structure_for_fsbrs(g, f);
  EXPECT_EQ(ts.num_types(0), 1);
  EXPECT_EQ(ts.num_types(1), 2);
  EXPECT_EQ(project(g, ts, rcsbr(g, ts)), f);

  const ProductSet sr = strong_rationalizability(g).limit;
  EXPECT_EQ(project(g, construct_structure_for_fsbrs(g, sr), rcsbr(g, construct_structure_for_fsbrs(g, sr))), sr);
  const ProductSet os = product(g, {{"Out"}, {"Stop"}});
  const TypeStructure t2 = construct_structure_for_fsbrs(g, os);
  EXPECT_EQ(project(g, t2, rcsbr(g, t2)), os);
}

TEST(Constructor, Errors) {
  const Game g = load("centipede.game.json");
  try {
    construct_structure_for_fsbrs(g, product(g, {{"Out"}, {"Go"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAnFsbrs);
  }
  try {
    construct_structure_for_fsbrs(g, ProductSet::empty_product(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyTarget);
  }
}

TEST(Constructor, RoundTripsOnEveryFixtureGame) {
  for (const auto& name : testing::fixture_games()) {
    const Game g = load(name);
    for (const auto& f : enumerate_fsbrs(g).members) {
      if (f.empty()) continue;
      const TypeStructure ts = construct_structure_for_fsbrs(g, f);
      EXPECT_TRUE(validate_type_structure(g, ts).ok());
      EXPECT_EQ(project(g, ts, rcsbr(g, ts)), f) << name << " " << format_product(g, f);
    }
  }
}

}  // namespace
}  // namespace rcsbr
