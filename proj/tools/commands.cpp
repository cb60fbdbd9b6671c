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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "rcsbr/format.hpp"
#include "rcsbr/random.hpp"

namespace rcsbr::cli {
namespace {

namespace fs = std::filesystem;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Game read_game(const std::string& path, Report& r) {
  r.add_input(path);
  return load_game(path);
}

std::string player_family(const Game& game, const PlayerFamily& f) {
  std::string out;
  for (const auto& m : f.members) out += (out.empty() ? "" : ", ") + format_set(game, f.player, m);
  return out.empty() ? "∅" : out;
}

std::vector<std::string> numbered(const Game& game, const std::vector<ProductSet>& members) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < members.size(); ++k) rows.push_back({std::to_string(k), format_product(game, members[k])});
  return align(rows);
}

std::vector<std::string> certificate_lines(const Game& game, const Certificate& cert) {
  std::vector<std::string> out{"witness " + format_product(game, cert.witness)};
  for (int i = 0; i < game.num_players(); ++i) {
    for (const auto& [s, cps] : cert.cps[i]) {
      out.push_back(game.player_name(i) + " " + game.strategy_label(i, s) + ":");
      for (const auto& l : format_cps(game, i, cps)) out.push_back("  " + l);
    }
  }
  return out;
}

Json certificate_json(const Game& game, const Certificate& cert) {
  Json j;
  j["witness"] = product_to_json(game, cert.witness);
  Json per = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    Json cpss = Json::object();
    for (const auto& [s, cps] : cert.cps[i]) cpss[game.strategy_label(i, s)] = cps_to_json(game, i, cps);
    per[game.player_name(i)] = cpss;
  }
  j["cps"] = per;
  return j;
}

void report_certificate(const Game& game, const std::string& heading, const Verdict& v, Report& r, Json& sink) {
  if (!v.certificate) throw Error(ErrorCode::kVerificationFailed, heading + ": no certificate");
  r.section(heading, certificate_lines(game, *v.certificate));
  sink.push_back(certificate_json(game, *v.certificate));
}

void certify_family(const Game& game, const SetFamily& family, const std::function<Verdict(const ProductSet&)>& check,
                    Report& r) {
  Json certs = Json::array();
  for (std::size_t k = 0; k < family.members.size(); ++k) {
    report_certificate(game, "certificate " + std::to_string(k) + ": " + format_product(game, family.members[k]),
                       check(family.members[k]), r, certs);
  }
  r.outputs()["certificates"] = certs;
}

void report_family(const Game& game, const SetFamily& family, const std::string& symbol, Report& r) {
  r.section(symbol + " (" + std::to_string(family.members.size()) + " members)", numbered(game, family.members));
  std::vector<std::vector<std::string>> rows;
  Json per = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    const PlayerFamily pf = player_specific(family, i);
    rows.push_back({symbol + "_" + game.player_name(i), player_family(game, pf)});
    per[game.player_name(i)] = player_family_to_json(game, pf);
  }
  r.section("player families", align(rows));
  r.outputs()["family"] = family_to_json(game, family);
  r.outputs()["player_families"] = per;
}

std::vector<std::string> sequence_rows(const Game& game, const std::vector<ProductSet>& seq, const std::string& name) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t m = 0; m < seq.size(); ++m) {
    rows.push_back({name + "^" + std::to_string(m), format_product(game, seq[m])});
  }
  return align(rows);
}

Json products_json(const Game& game, const std::vector<ProductSet>& seq) {
  Json j = Json::array();
  for (const auto& p : seq) j.push_back(product_to_json(game, p));
  return j;
}

Json events_json(const Game& game, const TypeStructure& ts, const EventProfile& e) {
  Json j = Json::object();
  for (int i = 0; i < game.num_players(); ++i) j[game.player_name(i)] = event_to_json(game, ts, i, e[i]);
  return j;
}

std::vector<std::vector<std::string>> event_rows(const Game& game, const TypeStructure& ts, const std::string& name,
                                                 const EventProfile& e) {
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < game.num_players(); ++i) {
    rows.push_back({name + "_" + game.player_name(i), format_event(game, ts, i, e[i])});
  }
  return rows;
}

std::string type_names(const TypeStructure& ts, int j, const IndexSet& types) {
  std::string out;
  for (int t : types) out += (out.empty() ? "" : ", ") + ts.types[j][t];
  return out.empty() ? "∅" : "{" + out + "}";
}

Json type_names_json(const TypeStructure& ts, int j, const IndexSet& types) {
  Json out = Json::array();
  for (int t : types) out.push_back(ts.types[j][t]);
  return out;
}

// "𝔉_a × 𝔉_b".
std::string product_symbol(const Game& game, const std::string& symbol) {
  std::string out;
  for (int i = 0; i < game.num_players(); ++i) out += (i ? " × " : "") + symbol + "_" + game.player_name(i);
  return out;
}

struct Membership {
  bool fsbrs, mfsbrs, product_fsbrs, product_mfsbrs;
};

Membership membership(const ProductSet& p, const Families& fam) {
  return {fam.fsbrs.contains(p), fam.mfsbrs.contains(p), in_product(fam.fsbrs_i, p), in_product(fam.mfsbrs_i, p)};
}

std::string membership_line(const Game& game, const Membership& m) {
  return "∈ 𝔉: " + yes_no(m.fsbrs) + "; ∈ 𝕄: " + yes_no(m.mfsbrs) + "; ∈ " + product_symbol(game, "𝔉") + ": " +
         yes_no(m.product_fsbrs) + "; ∈ " + product_symbol(game, "𝕄") + ": " + yes_no(m.product_mfsbrs);
}

Json membership_json(const Membership& m) {
  return {{"fsbrs", m.fsbrs}, {"mfsbrs", m.mfsbrs}, {"product_fsbrs", m.product_fsbrs},
          {"product_mfsbrs", m.product_mfsbrs}};
}

// ---- real --------------------------------------------------------------

struct RealRun {
  std::vector<Closure> closures;
  std::vector<SeparatingStructure> profile;
  Taxonomy taxonomy;
  RealProfile real;
};

RealRun run_real(const Game& game, const StateSpaceFile& f, bool closures_from_file) {
  RealRun run;
  if (closures_from_file) {
    if (!f.closures) throw Error(ErrorCode::kParseError, "the state-space file lists no closures");
    run.closures = *f.closures;
    for (const auto& cl : run.closures) check_closure(game, f.host, f.state, cl);
  } else {
    for (int i = 0; i < game.num_players(); ++i) run.closures.push_back(minimal_closure(game, f.host, f.state, i));
  }
  for (const auto& cl : run.closures) {
    run.profile.push_back(induce_separating_structure(game, f.host, f.state, cl));
  }
  run.taxonomy = classify(game, run.profile);
  run.real = real_rcsbr_profile(game, run.profile);
  return run;
}

void report_real(const Game& game, const StateSpaceFile& f, const RealRun& run, Report& r) {
  std::vector<std::vector<std::string>> rows{{"owner"}};
  for (int j = 0; j < game.num_players(); ++j) rows[0].push_back("T_" + game.player_name(j));
  Json cj = Json::object();
  for (const auto& cl : run.closures) {
    std::vector<std::string> row{game.player_name(cl.owner)};
    Json per = Json::object();
    for (int j = 0; j < game.num_players(); ++j) {
      row.push_back(type_names(f.host, j, cl.types[j]));
      per[game.player_name(j)] = type_names_json(f.host, j, cl.types[j]);
    }
    rows.push_back(row);
    cj[game.player_name(cl.owner)] = per;
  }
  r.section("closures", align(rows));
  r.outputs()["closures"] = cj;

  std::vector<std::vector<std::string>> ev{{"owner", "real", "imaginary", "real RCSBR"}};
  Json ej = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    const SeparatingStructure& st = run.profile[i];
    ev.push_back({game.player_name(i), type_names(st.ts, i, st.real), type_names(st.ts, i, st.imaginary),
                  format_event(game, st.ts, i, run.real.events[i])});
    ej[game.player_name(i)] = {{"real", type_names_json(st.ts, i, st.real)},
                               {"imaginary", type_names_json(st.ts, i, st.imaginary)},
                               {"real_rcsbr", event_to_json(game, st.ts, i, run.real.events[i])}};
  }
  r.section("separating structures", align(ev));
  r.outputs()["players"] = ej;
  r.section("projection", {format_product(game, run.real.projection)});
  r.outputs()["projection"] = product_to_json(game, run.real.projection);
}

void check_random_state_spaces(const Game& game, int count, std::uint64_t seed, Report& r) {
  std::mt19937_64 rng(seed);
  const Families fam = compute_families(game);
  int failures = 0;
  std::vector<int> applicable(4, 0);
  for (int k = 0; k < count; ++k) {
    const TypeStructure host = random_type_structure(game, rng);
    const StateSpace ss = random_state_space(game, host, rng);
    std::vector<SeparatingStructure> profile;
    for (int i = 0; i < game.num_players(); ++i) {
      profile.push_back(induce_separating_structure(game, host, ss, minimal_closure(game, host, ss, i)));
    }
    const Prop1Report rep = verify_prop1(game, profile, fam);
    for (const auto& part : rep.parts) applicable[part.part - 1] += part.applicable;
    failures += !rep.ok();
  }
  r.section("random state spaces (seed " + std::to_string(seed) + ")",
            align({{"checked", std::to_string(count)},
                   {"failures", std::to_string(failures)},
                   {"parts applicable", std::to_string(applicable[0]) + "/" + std::to_string(applicable[1]) + "/" +
                                            std::to_string(applicable[2]) + "/" + std::to_string(applicable[3])}}));
  r.outputs()["random"] = {{"seed", seed}, {"checked", count}, {"failures", failures}, {"applicable", applicable}};
  r.assertion("separation holds on random state spaces", failures == 0,
              std::to_string(count - failures) + "/" + std::to_string(count));
}

}  // namespace

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::kVerificationFailed ? kExitAssertion : kExitInvalid;
}

Quadrant parse_quadrant(const std::string& text) {
  std::string t;
  for (char c : text) t += (c == '_' || c == '&' || c == ',' || c == ' ') ? '/' : c;
  bool has_deg = false, has_common = false;
  Quadrant q;
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t end = std::min(t.find('/', start), t.size());
    const std::string w = t.substr(start, end - start);
    if (w == "degenerate") {
      q.degenerate = true, has_deg = true;
    } else if (w == "non-degenerate" || w == "nondegenerate") {
      q.degenerate = false, has_deg = true;
    } else if (w == "common") {
      q.common = true, has_common = true;
    } else if (w == "non-common" || w == "noncommon") {
      q.common = false, has_common = true;
    } else if (!w.empty()) {
      throw Error(ErrorCode::kParseError, "unknown quadrant word '" + w + "'");
    }
    start = end + 1;
  }
  if (!has_deg || !has_common) {
    throw Error(ErrorCode::kParseError, "a quadrant names both degeneracy and commonality, e.g. degenerate/common");
  }
  return q;
}

int cmd_validate(const GlobalOptions&, const ValidateArgs& a, Report& r) {
  if (a.game.empty()) {
    const Game game = read_game(a.path, r);
    std::vector<std::vector<std::string>> rows;
    Json strategies = Json::object();
    for (int i = 0; i < game.num_players(); ++i) {
      rows.push_back({"S_" + game.player_name(i), format_set(game, i, full_set(game.num_strategies(i)))});
      strategies[game.player_name(i)] = labels(game, i, full_set(game.num_strategies(i)));
    }
    r.section("game: OK", align(rows));
    r.section("", {std::to_string(game.infosets().size()) + " information sets; " +
                   (game.is_static() ? "static" : "dynamic")});
    r.outputs() = {{"kind", "game"}, {"valid", true}, {"strategies", strategies}, {"static", game.is_static()}};
    return kExitOk;
  }
  const Game game = read_game(a.game, r);
  r.add_input(a.path);
  const Json j = read_json_file(a.path);
  if (j.is_object() && j.contains("host")) {
    const StateSpaceFile f = state_space_from_json(game, j, fs::path(a.path).parent_path().string());
    const auto [open, witness] = is_non_belief_closed(game, f.host, f.state);
    std::string closed = "belief-closed";
    if (open) {
      closed = "not belief-closed: " + f.host.types[witness->player][witness->type] + " at " +
               game.conditioning_family(witness->player)[witness->event].id;
    }
    r.section("state space: OK", {closed});
    r.outputs() = {{"kind", "state_space"}, {"valid", true}, {"belief_closed", !open}};
    return kExitOk;
  }
  const TypeStructure ts = type_structure_from_json(game, j);
  const TypeStructureReport rep = validate_type_structure(game, ts);
  Json issues = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& issue : rep.issues) {
    const std::string name(error_name(issue.violation.code));
    rows.push_back({game.player_name(issue.player), ts.types[issue.player][issue.type], name, issue.violation.message});
    issues.push_back({{"player", game.player_name(issue.player)},
                      {"type", ts.types[issue.player][issue.type]},
                      {"code", name},
                      {"message", issue.violation.message}});
  }
  r.section(rep.ok() ? "type structure: OK" : "type structure: INVALID", align(rows));
  if (!rep.warnings.empty()) r.section("warnings", rep.warnings);
  r.outputs() = {{"kind", "type_structure"}, {"valid", rep.ok()}, {"issues", issues}, {"warnings", rep.warnings}};
  return rep.ok() ? kExitOk : kExitInvalid;
}

int cmd_solve(const GlobalOptions& g, const SolveArgs& a, Report& r) {
  const Game game = read_game(a.game, r);
  if (a.which == "sr") {
    const SrResult sr = strong_rationalizability(game);
    r.section("strong rationalizability", sequence_rows(game, sr.sequence, "SR"));
    r.section("", {"SR^∞ = " + format_product(game, sr.limit)});
    r.outputs()["sequence"] = products_json(game, sr.sequence);
    r.outputs()["limit"] = product_to_json(game, sr.limit);
  } else if (a.which == "fsbrs") {
    const SetFamily f = enumerate_fsbrs(game);
    report_family(game, f, "𝔉", r);
    if (g.certify) certify_family(game, f, [&](const ProductSet& p) { return is_fsbrs(game, p); }, r);
  } else if (a.which == "mfsbrs") {
    const SetFamily f = enumerate_fsbrs(game);
    const SetFamily m = enumerate_mfsbrs(game, f);
    report_family(game, m, "𝕄", r);
    if (g.certify) certify_family(game, m, [&](const ProductSet& p) { return is_mfsbrs(game, p, f); }, r);
  } else if (a.which == "p-infinity") {
    const PInfinityResult p = correlated_rationalizability(game);
    r.section("correlated rationalizability", sequence_rows(game, p.sequence, "P"));
    r.section("", {"P^∞ = " + format_product(game, p.limit)});
    r.outputs()["sequence"] = products_json(game, p.sequence);
    r.outputs()["limit"] = product_to_json(game, p.limit);
  } else if (a.which == "fbrs") {
    const SetFamily f = enumerate_fbrs(game);
    report_family(game, f, "FBRS", r);
    if (g.certify) certify_family(game, f, [&](const ProductSet& p) { return is_fbrs(game, p); }, r);
  } else {
    throw Error(ErrorCode::kParseError, "unknown solution concept '" + a.which + "'");
  }
  return kExitOk;
}

int cmd_rcsbr(const GlobalOptions& g, const RcsbrArgs& a, Report& r) {
  const Game game = read_game(a.game, r);
  if (a.random > 0) {
    std::mt19937_64 rng(g.seed);
    int failures = 0;
    for (int k = 0; k < a.random; ++k) failures += !check_theorem_bf(game, random_type_structure(game, rng)).verdict.holds;
    r.section("random structures (seed " + std::to_string(g.seed) + ")",
              align({{"checked", std::to_string(a.random)}, {"failures", std::to_string(failures)}}));
    r.outputs()["random"] = {{"seed", g.seed}, {"checked", a.random}, {"failures", failures}};
    r.assertion("proj RCSBR ∈ 𝔉 on random structures", failures == 0,
                std::to_string(a.random - failures) + "/" + std::to_string(a.random));
    return r.all_hold() ? kExitOk : kExitAssertion;
  }
  r.add_input(a.structure);
  const TypeStructure ts = load_type_structure(game, a.structure);
  require_valid_type_structure(game, ts);

  const CsbSequence seq = csb_sequence(game, ts);
  std::vector<std::vector<std::string>> rows = event_rows(game, ts, "Rat", seq.steps[0]);
  for (std::size_t m = 1; m < seq.steps.size(); ++m) {
    for (auto& row : event_rows(game, ts, "CSB^" + std::to_string(m), seq.steps[m])) rows.push_back(row);
  }
  r.section("common strong belief in rationality", align(rows));
  r.section("", {""});
  r.section("", align(event_rows(game, ts, "RCSBR", seq.limit)));
  Json steps = Json::array();
  for (const auto& s : seq.steps) steps.push_back(events_json(game, ts, s));
  r.outputs()["csb"] = steps;
  r.outputs()["rcsbr"] = events_json(game, ts, seq.limit);

  const TheoremReport th = check_theorem_bf(game, ts);
  r.section("projection", {format_product(game, th.projection), "∈ 𝔉: " + yes_no(th.verdict.holds)});
  r.outputs()["projection"] = product_to_json(game, th.projection);
  r.outputs()["in_fsbrs"] = th.verdict.holds;
  r.assertion("proj RCSBR ∈ 𝔉", th.verdict.holds);
  if (g.certify && th.verdict.holds) {
    Json certs = Json::array();
    report_certificate(game, "certificate", th.verdict, r, certs);
    r.outputs()["certificate"] = certs[0];
  }

  if (a.rcbr) {
    const CsbSequence cb = rcbr_sequence(game, ts);
    std::vector<std::vector<std::string>> cb_rows;
    for (std::size_t m = 1; m < cb.steps.size(); ++m) {
      for (auto& row : event_rows(game, ts, "CB^" + std::to_string(m), cb.steps[m])) cb_rows.push_back(row);
    }
    for (auto& row : event_rows(game, ts, "RCBR", cb.limit)) cb_rows.push_back(row);
    r.section("common belief in rationality", align(cb_rows));
    r.outputs()["rcbr"] = events_json(game, ts, cb.limit);
    r.assertion("RCBR = RCSBR (static game)", cb.limit == seq.limit);
  }
  return r.all_hold() ? kExitOk : kExitAssertion;
}

int cmd_real(const GlobalOptions& g, const RealArgs& a, Report& r) {
  const Game game = read_game(a.game, r);
  if (a.random > 0) {
    check_random_state_spaces(game, a.random, g.seed, r);
    return r.all_hold() ? kExitOk : kExitAssertion;
  }
  if (a.closures != "minimal" && a.closures != "file") {
    throw Error(ErrorCode::kParseError, "--closures takes 'minimal' or 'file'");
  }
  r.add_input(a.state);
  const Json j = read_json_file(a.state);
  const std::string base = fs::path(a.state).parent_path().string();
  if (j.is_object() && j.contains("host") && j["host"].is_string()) {
    fs::path host(j["host"].get<std::string>());
    if (host.is_relative() && !base.empty()) host = fs::path(base) / host;
    r.add_input(host.string());
  }
  const StateSpaceFile f = state_space_from_json(game, j, base);
  const RealRun run = run_real(game, f, a.closures == "file");
  report_real(game, f, run, r);

  const Families fam = compute_families(game);
  const Membership m = membership(run.real.projection, fam);
  r.section("", {membership_line(game, m)});
  r.outputs()["membership"] = membership_json(m);

  if (a.classify) {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < game.num_players(); ++i) {
      rows.push_back({game.player_name(i), run.taxonomy.degenerate[i] ? "degenerate" : "non-degenerate"});
    }
    rows.push_back({"closures", run.taxonomy.common ? "common" : "non-common"});
    rows.push_back({"quadrant", quadrant_name(run.taxonomy)});
    rows.push_back({"family", cell_name(run.taxonomy.cell())});
    r.section("classification", align(rows));
    r.outputs()["classification"] = {{"degenerate", run.taxonomy.degenerate},
                                     {"common", run.taxonomy.common},
                                     {"quadrant", quadrant_name(run.taxonomy)},
                                     {"family", cell_name(run.taxonomy.cell())}};
  }
  if (a.verify_prop1) {
    const Prop1Report rep = verify_prop1(game, run.profile, fam);
    std::vector<std::vector<std::string>> rows;
    Json parts = Json::array();
    for (const auto& part : rep.parts) {
      const std::string status = !part.applicable ? "n/a" : part.holds ? "holds" : "FAILS";
      rows.push_back({std::to_string(part.part), "proj " + part.claim, status});
      parts.push_back({{"part", part.part}, {"claim", part.claim}, {"applicable", part.applicable},
                       {"holds", part.holds}});
      if (part.applicable) r.assertion("part " + std::to_string(part.part) + ": proj " + part.claim, part.holds);
    }
    r.section("separation", align(rows));
    r.outputs()["separation"] = parts;
  }
  return r.all_hold() ? kExitOk : kExitAssertion;
}

int cmd_construct(const GlobalOptions&, const ConstructArgs& a, Report& r) {
  const Game game = read_game(a.game, r);
  Json target_json;
  if (!a.target.empty() && (a.target[0] == '{' || a.target[0] == '[')) {
    target_json = parse_json(a.target);
  } else {
    r.add_input(a.target);
    target_json = read_json_file(a.target);
  }
  const ProductSet target = product_from_json(game, target_json);
  const Quadrant q = parse_quadrant(a.quadrant);
  const Families fam = compute_families(game);
  const Prop2Construction c = construct_prop2(game, target, q, fam);

  fs::create_directories(a.out);
  const std::string host_path = (fs::path(a.out) / "host.ts.json").string();
  const std::string state_path = (fs::path(a.out) / "state.json").string();
  {
    std::ofstream(host_path) << type_structure_to_json(game, c.host).dump(2) << '\n';
    std::ofstream(state_path) << state_space_to_json(game, c.host, c.state, &c.closures, "host.ts.json").dump(2)
                              << '\n';
  }
  r.section("target", {format_product(game, target)});
  std::vector<std::vector<std::string>> types;
  for (int j = 0; j < game.num_players(); ++j) {
    types.push_back({"T_" + game.player_name(j), type_names(c.host, j, full_set(c.host.num_types(j))),
                     "real " + type_names(c.host, j, c.state.real[j])});
  }
  r.section("host", align(types));
  if (!c.notes.empty()) r.section("notes", c.notes);
  r.section("wrote", align({{host_path, "sha256:" + sha256_file(host_path)},
                            {state_path, "sha256:" + sha256_file(state_path)}}));
  r.outputs()["target"] = product_to_json(game, target);
  r.outputs()["files"] = {host_path, state_path};
  r.outputs()["notes"] = c.notes;

  // Read the files back and redo the analysis from scratch.
  const StateSpaceFile f = load_state_space(game, state_path);
  const RealRun run = run_real(game, f, true);
  report_real(game, f, run, r);
  r.section("classification", {quadrant_name(run.taxonomy)});
  r.assertion("round trip: projection = target", run.real.projection == target);
  r.assertion("round trip: quadrant", run.taxonomy.common == q.common && run.taxonomy.all_degenerate() == q.degenerate,
              quadrant_name(run.taxonomy));
  return r.all_hold() ? kExitOk : kExitAssertion;
}

}  // namespace rcsbr::cli
