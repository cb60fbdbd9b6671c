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

// Python bindings. Results cross the boundary as JSON text, the same
// schema the command-line reports use; rcsbr/__init__.py decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "rcsbr/format.hpp"
#include "rcsbr/io.hpp"
#include "rcsbr/separating.hpp"
#include "rcsbr/solution.hpp"

namespace py = pybind11;

namespace rcsbr {
namespace {

Json products(const Game& game, const std::vector<ProductSet>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(product_to_json(game, p));
  return j;
}

Json events(const Game& game, const TypeStructure& ts, const EventProfile& e) {
  Json j = Json::object();
  for (int i = 0; i < game.num_players(); ++i) j[game.player_name(i)] = event_to_json(game, ts, i, e[i]);
  return j;
}

Json family_json(const Game& game, const SetFamily& f) {
  Json per = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    per[game.player_name(i)] = player_family_to_json(game, player_specific(f, i));
  }
  return {{"members", family_to_json(game, f)}, {"player_families", per}};
}

Json real_json(const Game& game, const TypeStructure& host, const StateSpace& ss,
               const std::vector<Closure>& closures) {
  std::vector<SeparatingStructure> profile;
  for (const auto& cl : closures) profile.push_back(induce_separating_structure(game, host, ss, cl));
  const RealProfile real = real_rcsbr_profile(game, profile);
  const Prop1Report rep = verify_prop1(game, profile, compute_families(game));
  Json parts = Json::array();
  for (const auto& p : rep.parts) {
    parts.push_back({{"part", p.part}, {"claim", p.claim}, {"applicable", p.applicable}, {"holds", p.holds}});
  }
  Json per = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    per[game.player_name(i)] = event_to_json(game, profile[i].ts, i, real.events[i]);
  }
  return {{"projection", product_to_json(game, real.projection)},
          {"real_rcsbr", per},
          {"degenerate", rep.taxonomy.degenerate},
          {"common", rep.taxonomy.common},
          {"quadrant", quadrant_name(rep.taxonomy)},
          {"separation", parts}};
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace
}  // namespace rcsbr

PYBIND11_MODULE(_rcsbr, m) {
  using namespace rcsbr;

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&]() { return py::exception<Error>(m, "RcsbrError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(error_name(e.code())) + ": " + e.detail()).c_str());
    }
  });

  py::class_<Game>(m, "Game")
      .def_static("from_file", &load_game)
      .def_static("from_json", [](const std::string& text) { return game_from_json(parse_json(text)); })
      .def("to_json", [](const Game& g) { return dump(game_to_json(g)); })
      .def_property_readonly("players", [](const Game& g) {
        std::vector<std::string> out;
        for (int i = 0; i < g.num_players(); ++i) out.push_back(g.player_name(i));
        return out;
      })
      .def("strategies", [](const Game& g, int i) { return labels(g, i, full_set(g.num_strategies(i))); })
      .def_property_readonly("is_static", &Game::is_static);

  py::class_<TypeStructure>(m, "TypeStructure")
      .def_static("from_file",
                  [](const Game& g, const std::string& path) {
                    TypeStructure ts = load_type_structure(g, path);
                    require_valid_type_structure(g, ts);
                    return ts;
                  })
      .def("to_json", [](const TypeStructure& ts, const Game& g) { return dump(type_structure_to_json(g, ts)); })
      .def_property_readonly("types", [](const TypeStructure& ts) { return ts.types; });

  m.def("strong_rationalizability", [](const Game& g) {
    const SrResult r = strong_rationalizability(g);
    return dump({{"sequence", products(g, r.sequence)}, {"limit", product_to_json(g, r.limit)}});
  });
  m.def("correlated_rationalizability", [](const Game& g) {
    const PInfinityResult r = correlated_rationalizability(g);
    return dump({{"sequence", products(g, r.sequence)}, {"limit", product_to_json(g, r.limit)}});
  });
  m.def("fsbrs", [](const Game& g) { return dump(family_json(g, enumerate_fsbrs(g))); });
  m.def("mfsbrs", [](const Game& g) { return dump(family_json(g, enumerate_mfsbrs(g))); });
  m.def("fbrs", [](const Game& g) { return dump(family_json(g, enumerate_fbrs(g))); });
  m.def("is_fsbrs", [](const Game& g, const std::string& target) {
    return is_fsbrs(g, product_from_json(g, parse_json(target))).holds;
  });
  m.def("rcsbr", [](const Game& g, const TypeStructure& ts) {
    const TheoremReport th = check_theorem_bf(g, ts);
    return dump({{"rcsbr", events(g, ts, th.rcsbr)},
                 {"projection", product_to_json(g, th.projection)},
                 {"in_fsbrs", th.verdict.holds}});
  });
  m.def("rcbr", [](const Game& g, const TypeStructure& ts) { return dump(events(g, ts, rcbr(g, ts))); });
  m.def("real", [](const Game& g, const std::string& state_path) {
    const StateSpaceFile f = load_state_space(g, state_path);
    std::vector<Closure> closures;
    for (int i = 0; i < g.num_players(); ++i) closures.push_back(minimal_closure(g, f.host, f.state, i));
    return dump(real_json(g, f.host, f.state, closures));
  });
  m.def("construct", [](const Game& g, const std::string& target, bool degenerate, bool common) {
    const Prop2Construction c =
        construct_prop2(g, product_from_json(g, parse_json(target)), Quadrant{degenerate, common}, compute_families(g));
    Json j = real_json(g, c.host, c.state, c.closures);
    j["host"] = type_structure_to_json(g, c.host);
    j["state"] = state_space_to_json(g, c.host, c.state, &c.closures, "host");
    j["notes"] = c.notes;
    return dump(j);
  });
}
