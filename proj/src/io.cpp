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

#include "rcsbr/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rcsbr/format.hpp"

namespace rcsbr {
namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::kParseError, msg); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_fail(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  if (j.is_string()) return {j.get<std::string>()};
  if (!j.is_array()) parse_fail(where + ": expected a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, where));
  return out;
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail(where + ": expected a rational string \"p/q\"");
}

bool is_comment(const std::string& key) { return !key.empty() && key[0] == '_'; }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

RawGame raw_game_from_json(const Json& j) {
  RawGame raw;
  raw.players = as_strings(member(j, "players", "game"), "players");
  const Json& nodes = member(j, "nodes", "game");
  if (!nodes.is_object()) parse_fail("nodes: expected an object");
  for (const auto& [id, body] : nodes.items()) {
    if (!body.is_object()) parse_fail("node '" + id + "': expected an object");
    RawNode node;
    node.id = id;
    node.actions.assign(raw.players.size(), std::nullopt);
    if (body.contains("actions")) {
      const Json& acts = body.at("actions");
      if (!acts.is_object()) parse_fail("node '" + id + "': actions must map players to lists");
      for (const auto& [player, list] : acts.items()) {
        auto it = std::find(raw.players.begin(), raw.players.end(), player);
        if (it == raw.players.end()) {
          throw Error(ErrorCode::kUnknownPlayer, "node '" + id + "' lists actions for unknown player '" + player + "'");
        }
        node.actions[it - raw.players.begin()] = as_strings(list, "node '" + id + "' actions");
      }
    }
    if (body.contains("children")) {
      const Json& ch = body.at("children");
      if (!ch.is_object()) parse_fail("node '" + id + "': children must be an object");
      for (const auto& [key, child] : ch.items()) {
        node.children.emplace_back(key, as_string(child, "node '" + id + "' child"));
      }
    }
    if (body.contains("payoffs")) {
      const Json& pay = body.at("payoffs");
      if (!pay.is_array()) parse_fail("node '" + id + "': payoffs must be a list");
      std::vector<Rational> values;
      for (const auto& v : pay) values.push_back(as_rational(v, "node '" + id + "' payoff"));
      node.payoffs = std::move(values);
    }
    raw.nodes.push_back(std::move(node));
  }
  if (j.contains("infosets")) {
    const Json& sets = j.at("infosets");
    if (!sets.is_object()) parse_fail("infosets: expected an object");
    for (const auto& [id, body] : sets.items()) {
      RawInfoSet set;
      set.id = id;
      set.player = as_string(member(body, "player", "information set '" + id + "'"), "player");
      set.nodes = as_strings(member(body, "nodes", "information set '" + id + "'"), "nodes");
      raw.infosets.push_back(std::move(set));
    }
  }
  return raw;
}

Game game_from_json(const Json& j) { return validate_game(raw_game_from_json(j)); }

Game load_game(const std::string& path) { return game_from_json(read_json_file(path)); }

Json game_to_json(const Game& game) {
  Json j;
  j["players"] = game.players();
  Json nodes = Json::object();
  // Breadth-first from the root so the file reads top-down.
  std::vector<int> order{game.root()};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int c : game.nodes()[order[k]].children) order.push_back(c);
  }
  for (int x : order) {
    const Node& node = game.nodes()[x];
    Json body = Json::object();
    if (node.terminal) {
      Json pay = Json::array();
      for (const auto& v : node.payoffs) pay.push_back(to_fraction(v));
      body["payoffs"] = pay;
    } else {
      Json acts = Json::object();
      std::vector<int> active;
      for (int p = 0; p < game.num_players(); ++p) {
        if (node.infoset[p] >= 0) {
          acts[game.player_name(p)] = node.actions[p];
          active.push_back(p);
        }
      }
      body["actions"] = acts;
      Json ch = Json::object();
      for (int c : node.children) {
        std::string key;
        for (std::size_t a = 0; a < active.size(); ++a) {
          if (a) key += ",";
          key += node.actions[active[a]][game.nodes()[c].incoming[active[a]]];
        }
        ch[key] = game.nodes()[c].id;
      }
      body["children"] = ch;
    }
    nodes[node.id] = body;
  }
  j["nodes"] = nodes;
  Json sets = Json::object();
  for (const InfoSet& set : game.infosets()) {
    Json ids = Json::array();
    for (int x : set.nodes) ids.push_back(game.nodes()[x].id);
    sets[set.id] = {{"player", game.player_name(set.player)}, {"nodes", ids}};
  }
  j["infosets"] = sets;
  return j;
}

TypeStructure type_structure_from_json(const Game& game, const Json& j) {
  if (!j.is_object()) parse_fail("type structure: expected an object keyed by player");
  const int n = game.num_players();
  TypeStructure ts;
  ts.types.resize(n);
  ts.beliefs.resize(n);
  for (const auto& [key, body] : j.items()) {
    if (is_comment(key)) continue;
    game.player_index(key);  // rejects unknown players
  }
  for (int i = 0; i < n; ++i) {
    const std::string& name = game.player_name(i);
    if (!j.contains(name)) parse_fail("type structure: missing player '" + name + "'");
    ts.types[i] = as_strings(member(j.at(name), "types", "player '" + name + "'"), "types");
    if (std::set<std::string>(ts.types[i].begin(), ts.types[i].end()).size() != ts.types[i].size()) {
      parse_fail("player '" + name + "': duplicate type label");
    }
  }
  const auto counts = ts.type_counts();
  for (int i = 0; i < n; ++i) {
    const std::string& name = game.player_name(i);
    const Json& beliefs = member(j.at(name), "beliefs", "player '" + name + "'");
    StateDomain dom(game, counts, i);
    const auto opp = game.opponents(i);
    for (const auto& [tname, _] : beliefs.items()) {
      if (!is_comment(tname)) ts.type_index(i, tname);
    }
    for (int t = 0; t < ts.num_types(i); ++t) {
      Cps b = lifted_skeleton(game, counts, i);
      if (!beliefs.contains(ts.types[i][t])) {
        parse_fail("player '" + name + "': no beliefs for type '" + ts.types[i][t] + "'");
      }
      std::vector<bool> given(b.family.size(), false);
      for (const auto& [ev_name, entries] : beliefs.at(ts.types[i][t]).items()) {
        if (is_comment(ev_name)) continue;
        const int k = game.event_by_name(i, ev_name);
        if (given[k]) parse_fail("type '" + ts.types[i][t] + "': conditioning event '" + ev_name + "' given twice");
        given[k] = true;
        if (!entries.is_array()) parse_fail("type '" + ts.types[i][t] + "': expected a list of atoms");
        for (const Json& e : entries) {
          const auto s_names = as_strings(member(e, "s", "belief atom"), "s");
          const auto t_names = as_strings(member(e, "t", "belief atom"), "t");
          if (s_names.size() != opp.size() || t_names.size() != opp.size()) {
            parse_fail("type '" + ts.types[i][t] + "': each atom names one strategy and one type per opponent");
          }
          std::vector<int> s(opp.size()), tt(opp.size());
          for (std::size_t q = 0; q < opp.size(); ++q) {
            s[q] = game.strategy_index(opp[q], s_names[q]);
            tt[q] = ts.type_index(opp[q], t_names[q]);
          }
          b.conditionals[k][dom.encode(s, tt)] += as_rational(member(e, "p", "belief atom"), "p");
        }
      }
      ts.beliefs[i].push_back(std::move(b));
    }
  }
  return ts;
}

TypeStructure load_type_structure(const Game& game, const std::string& path) {
  return type_structure_from_json(game, read_json_file(path));
}

Json type_structure_to_json(const Game& game, const TypeStructure& ts) {
  Json j = Json::object();
  const auto counts = ts.type_counts();
  for (int i = 0; i < game.num_players(); ++i) {
    StateDomain dom(game, counts, i);
    const auto opp = game.opponents(i);
    Json beliefs = Json::object();
    for (int t = 0; t < ts.num_types(i); ++t) {
      Json per = Json::object();
      const Cps& b = ts.beliefs[i][t];
      for (std::size_t k = 0; k < b.conditionals.size(); ++k) {
        Json atoms = Json::array();
        for (int atom : support(b.conditionals[k])) {
          const auto s = dom.strategies(atom);
          const auto tt = dom.types(atom);
          Json sl = Json::array(), tl = Json::array();
          for (std::size_t q = 0; q < opp.size(); ++q) {
            sl.push_back(game.strategy_label(opp[q], s[q]));
            tl.push_back(ts.types[opp[q]][tt[q]]);
          }
          atoms.push_back({{"s", sl}, {"t", tl}, {"p", to_fraction(b.conditionals[k][atom])}});
        }
        per[game.conditioning_family(i)[k].id] = atoms;
      }
      beliefs[ts.types[i][t]] = per;
    }
    j[game.player_name(i)] = {{"types", ts.types[i]}, {"beliefs", beliefs}};
  }
  return j;
}

Cps cps_from_json(const Game& game, int i, const Json& j) {
  Cps cps = cps_skeleton(game, i);
  std::map<std::string, int> atom_of;
  for (int y = 0; y < cps.domain_size; ++y) atom_of[game.opponent_label(i, y)] = y;
  std::vector<bool> listed(cps.family.size(), false);
  for (const auto& id : as_strings(member(j, "family", "cps"), "family")) {
    listed[game.event_by_name(i, id)] = true;
  }
  for (std::size_t k = 0; k < listed.size(); ++k) {
    if (!listed[k]) {
      throw Error(ErrorCode::kUnknownConditioningEvent, "cps family omits '" + cps.event_ids[k] + "'");
    }
  }
  const Json& conds = member(j, "conditionals", "cps");
  for (const auto& [id, measure] : conds.items()) {
    const int k = game.event_by_name(i, id);
    for (const auto& [atom, p] : measure.items()) {
      auto it = atom_of.find(atom);
      if (it == atom_of.end()) {
        throw Error(ErrorCode::kUnknownStrategy, "unknown opponent profile '" + atom + "'");
      }
      cps.conditionals[k][it->second] += as_rational(p, "probability");
    }
  }
  return cps;
}

Json cps_to_json(const Game& game, int i, const Cps& cps) {
  Json j;
  Json fam = Json::array();
  Json conds = Json::object();
  const auto& family = game.conditioning_family(i);
  for (std::size_t k = 0; k < family.size(); ++k) {
    fam.push_back(family[k].id);
    Json m = Json::object();
    for (int y : support(cps.conditionals.at(k))) m[game.opponent_label(i, y)] = to_fraction(cps.conditionals[k][y]);
    conds[family[k].id] = m;
  }
  j["family"] = fam;
  j["conditionals"] = conds;
  return j;
}

ProductSet product_from_json(const Game& game, const Json& j) {
  std::vector<IndexSet> parts(game.num_players());
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != game.num_players()) parse_fail("product: one list per player expected");
    for (int p = 0; p < game.num_players(); ++p) {
      parts[p] = strategies_from_labels(game, p, as_strings(j[p], "product"));
    }
  } else if (j.is_object()) {
    for (const auto& [key, list] : j.items()) {
      const int p = game.player_index(key);
      parts[p] = strategies_from_labels(game, p, as_strings(list, "product"));
    }
  } else {
    parse_fail("product: expected an object or a list");
  }
  return ProductSet(std::move(parts));
}

Json product_to_json(const Game& game, const ProductSet& p) {
  Json j = Json::array();
  for (int i = 0; i < game.num_players(); ++i) j.push_back(labels(game, i, p[i]));
  return j;
}

Json family_to_json(const Game& game, const SetFamily& family) {
  Json j = Json::array();
  for (const auto& m : family.members) j.push_back(product_to_json(game, m));
  return j;
}

Json player_family_to_json(const Game& game, const PlayerFamily& family) {
  Json j = Json::array();
  for (const auto& m : family.members) j.push_back(labels(game, family.player, m));
  return j;
}

Json event_to_json(const Game& game, const TypeStructure& ts, int i, const Event& e) {
  Json j = Json::array();
  for (int code : e) {
    j.push_back({game.strategy_label(i, code / ts.num_types(i)), ts.types[i][code % ts.num_types(i)]});
  }
  return j;
}

namespace {

IndexSet types_from_names(const TypeStructure& ts, int j, const Json& names) {
  IndexSet out;
  for (const auto& name : as_strings(names, "types")) out.push_back(ts.type_index(j, name));
  return make_set(std::move(out));
}

}  // namespace

StateSpaceFile state_space_from_json(const Game& game, const Json& j, const std::string& base_dir) {
  StateSpaceFile f;
  const Json& host = member(j, "host", "state space");
  if (host.is_string()) {
    std::filesystem::path p(host.get<std::string>());
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    f.host = load_type_structure(game, p.string());
  } else {
    f.host = type_structure_from_json(game, host);
  }
  require_valid_type_structure(game, f.host);
  f.state.real.assign(game.num_players(), {});
  const Json& real = member(j, "real_types", "state space");
  for (const auto& [player, names] : real.items()) {
    const int p = game.player_index(player);
    f.state.real[p] = types_from_names(f.host, p, names);
  }
  check_state_space(game, f.host, f.state);
  if (j.contains("closures")) {
    std::vector<Closure> closures;
    for (int i = 0; i < game.num_players(); ++i) {
      const Json& entry = member(j.at("closures"), game.player_name(i).c_str(), "closures");
      Closure cl;
      cl.owner = i;
      cl.types.assign(game.num_players(), {});
      for (const auto& [player, names] : entry.items()) {
        const int p = game.player_index(player);
        cl.types[p] = types_from_names(f.host, p, names);
      }
      closures.push_back(std::move(cl));
    }
    f.closures = std::move(closures);
  }
  return f;
}

StateSpaceFile load_state_space(const Game& game, const std::string& path) {
  return state_space_from_json(game, read_json_file(path), std::filesystem::path(path).parent_path().string());
}

Json state_space_to_json(const Game& game, const TypeStructure& host, const StateSpace& ss,
                         const std::vector<Closure>* closures, const std::string& host_ref) {
  Json j;
  j["host"] = host_ref;
  auto names = [&](int p, const IndexSet& set) {
    Json out = Json::array();
    for (int t : set) out.push_back(host.types[p][t]);
    return out;
  };
  Json real = Json::object();
  for (int p = 0; p < game.num_players(); ++p) real[game.player_name(p)] = names(p, ss.real[p]);
  j["real_types"] = real;
  if (closures) {
    Json cl = Json::object();
    for (const Closure& c : *closures) {
      Json per = Json::object();
      for (int p = 0; p < game.num_players(); ++p) per[game.player_name(p)] = names(p, c.types[p]);
      cl[game.player_name(c.owner)] = per;
    }
    j["closures"] = cl;
  }
  return j;
}

}  // namespace rcsbr
