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

#include "helpers.hpp"

namespace rcsbr {
namespace {

using testing::load;
using testing::product;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kVerificationFailed;
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(to_fraction(Rational(2)), "2/1");
  for (const char* bad : {"", "x", "1/0", "1/2/3", "1.5"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::kParseError) << bad;
  }
}

TEST(Json, BadInputIsAParseError) {
  EXPECT_EQ(code_of([] { parse_json("{"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/game.json"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { game_from_json(parse_json(R"({"nodes": {}})")); }), ErrorCode::kParseError);
}

TEST(GameIo, RoundTrip) {
  for (const auto& name : testing::fixture_games()) {
    const Game g = load(name);
    const Json once = game_to_json(g);
    const Game again = game_from_json(once);
    EXPECT_EQ(game_to_json(again), once) << name;
    EXPECT_EQ(again.num_profiles(), g.num_profiles());
  }
}

TEST(TypeStructureIo, RoundTrip) {
  const Game g = load("centipede.game.json");
  for (const char* name : {"table1.ts.json", "table3.ts.json"}) {
    const TypeStructure ts = load_type_structure(g, oracle::fixture(name));
    const TypeStructure again = type_structure_from_json(g, type_structure_to_json(g, ts));
    EXPECT_EQ(again.types, ts.types);
    for (int i = 0; i < 2; ++i) {
      for (int t = 0; t < ts.num_types(i); ++t) {
        EXPECT_EQ(again.beliefs[i][t].conditionals, ts.beliefs[i][t].conditionals);
      }
    }
  }
}

TEST(TypeStructureIo, Errors) {
  const Game g = load("centipede.game.json");
  const Json ok = type_structure_to_json(g, load_type_structure(g, oracle::fixture("table3.ts.json")));

  Json unknown_player = ok;
  unknown_player["z"] = Json::object();
  EXPECT_EQ(code_of([&] { type_structure_from_json(g, unknown_player); }), ErrorCode::kUnknownPlayer);

  Json missing = ok;
  missing.erase("b");
  EXPECT_EQ(code_of([&] { type_structure_from_json(g, missing); }), ErrorCode::kParseError);

  Json dup = ok;
  dup["a"]["types"].push_back(dup["a"]["types"][0]);
  EXPECT_EQ(code_of([&] { type_structure_from_json(g, dup); }), ErrorCode::kParseError);

  Json bad_event = ok;
  const std::string t0 = bad_event["a"]["types"][0];
  bad_event["a"]["beliefs"][t0]["b.In"] = Json::array();
  EXPECT_EQ(code_of([&] { type_structure_from_json(g, bad_event); }), ErrorCode::kUnknownConditioningEvent);

  Json bad_strategy = ok;
  bad_strategy["a"]["beliefs"][t0]["root"][0]["s"] = {"Jump"};
  EXPECT_EQ(code_of([&] { type_structure_from_json(g, bad_strategy); }), ErrorCode::kUnknownStrategy);

  Json commented = ok;
  commented["_note"] = "ignored";
  EXPECT_NO_THROW(type_structure_from_json(g, commented));
}

TEST(CpsIo, RoundTrip) {
  const Game g = load("centipede.game.json");
  const Cps cps = lps_to_cps({dirac(3, 0), dirac(3, 2), dirac(3, 1)}, cps_skeleton(g, 1).family);
  const Json j = cps_to_json(g, 1, cps);
  EXPECT_EQ(cps_from_json(g, 1, j).conditionals, cps.conditionals);

  Json partial = j;
  partial["family"] = {"root"};
  EXPECT_EQ(code_of([&] { cps_from_json(g, 1, partial); }), ErrorCode::kUnknownConditioningEvent);
  Json bad_atom = j;
  bad_atom["conditionals"]["root"]["Nowhere"] = "1/1";
  EXPECT_EQ(code_of([&] { cps_from_json(g, 1, bad_atom); }), ErrorCode::kUnknownStrategy);
}

TEST(ProductIo, ObjectAndArrayForms) {
  const Game g = load("centipede.game.json");
  const ProductSet expected = product(g, {{"Out"}, {"Stop", "Go"}});
  EXPECT_EQ(product_from_json(g, parse_json(R"({"a": ["Out"], "b": ["Go", "Stop"]})")), expected);
  EXPECT_EQ(product_from_json(g, parse_json(R"([["Out"], ["Stop", "Go"]])")), expected);
  EXPECT_EQ(product_from_json(g, product_to_json(g, expected)), expected);
  EXPECT_EQ(code_of([&] { product_from_json(g, parse_json(R"([["Out"]])")); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { product_from_json(g, parse_json(R"({"a": ["Up"]})")); }), ErrorCode::kUnknownStrategy);
  EXPECT_EQ(code_of([&] { product_from_json(g, parse_json("3")); }), ErrorCode::kParseError);
}

TEST(StateSpaceIo, InlineHostAndClosures) {
  const Game g = load("centipede.game.json");
  const StateSpaceFile file = load_state_space(g, oracle::fixture("table2.state.json"));
  std::vector<Closure> closures;
  for (int i = 0; i < 2; ++i) closures.push_back(minimal_closure(g, file.host, file.state, i));

  Json j = state_space_to_json(g, file.host, file.state, &closures, "unused");
  j["host"] = type_structure_to_json(g, file.host);
  const StateSpaceFile back = state_space_from_json(g, j, "");
  EXPECT_EQ(back.state.real, file.state.real);
  ASSERT_TRUE(back.closures.has_value());
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ((*back.closures)[i].owner, i);
    EXPECT_EQ((*back.closures)[i].types, closures[i].types);
  }

  Json unknown = j;
  unknown["real_types"]["a"] = {"t_z"};
  EXPECT_EQ(code_of([&] { state_space_from_json(g, unknown, ""); }), ErrorCode::kUnknownType);
}

}  // namespace
}  // namespace rcsbr
