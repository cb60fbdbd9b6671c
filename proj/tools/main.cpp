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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace rcsbr::cli;

  CLI::App app{"Strong-belief solution concepts and separating type structures"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_flag("--json", g.json, "Print the report as JSON");
  app.add_flag("--certify", g.certify, "Print justifying CPSs");
  app.add_option("--seed", g.seed, "Seed for --random runs");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check a game, type structure or state space");
  validate->add_option("path", va.path)->required();
  validate->add_option("--game", va.game, "Game the file refers to");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Compute a solution concept");
  solve->add_option("which", sa.which)
      ->required()
      ->check(CLI::IsMember({"sr", "fsbrs", "mfsbrs", "p-infinity", "fbrs"}));
  solve->add_option("game", sa.game)->required();

  RcsbrArgs ra;
  auto* rc = app.add_subcommand("rcsbr", "Rationality and common strong belief in rationality");
  rc->add_option("game", ra.game)->required();
  rc->add_option("structure", ra.structure);
  rc->add_flag("--rcbr", ra.rcbr, "Also compute RCBR (static games)");
  rc->add_option("--random", ra.random, "Check N random structures instead");

  RealArgs la;
  auto* real = app.add_subcommand("real", "Real RCSBR in the separating structures of a state space");
  real->add_option("game", la.game)->required();
  real->add_option("state", la.state);
  real->add_option("--closures", la.closures, "minimal | file")->check(CLI::IsMember({"minimal", "file"}));
  real->add_flag("--classify", la.classify, "Print the degeneracy/commonality classification");
  real->add_flag("--verify-prop1", la.verify_prop1, "Check which families the projection must belong to");
  real->add_option("--random", la.random, "Check N random state spaces instead");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a state space whose real RCSBR projects onto a target");
  construct->add_option("game", ca.game)->required();
  construct->add_option("--target", ca.target, "Product set, inline JSON or a file")->required();
  construct->add_option("--quadrant", ca.quadrant, "e.g. degenerate/common")->required();
  construct->add_option("--out", ca.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (rc->parsed() && ra.structure.empty() && ra.random <= 0) {
    std::cerr << "rcsbr: give a structure file or --random N\n";
    return kExitUsage;
  }
  if (real->parsed() && la.state.empty() && la.random <= 0) {
    std::cerr << "real: give a state-space file or --random N\n";
    return kExitUsage;
  }

  Report report(std::vector<std::string>(argv + 1, argv + argc));
  int code = kExitOk;
  try {
    if (validate->parsed()) code = cmd_validate(g, va, report);
    if (solve->parsed()) code = cmd_solve(g, sa, report);
    if (rc->parsed()) code = cmd_rcsbr(g, ra, report);
    if (real->parsed()) code = cmd_real(g, la, report);
    if (construct->parsed()) code = cmd_construct(g, ca, report);
  } catch (const rcsbr::Error& e) {
    const std::string name(rcsbr::error_name(e.code()));
    report.section("error", {name + ": " + e.detail()});
    report.outputs()["error"] = {{"code", name}, {"detail", e.detail()}};
    code = exit_code_for(e);
  }
  std::cout << (g.json ? report.json() : report.text());
  return code;
}
