// Copyright 2026 The typereg Authors
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

// typereg: equilibria, type-regularity and prior-independence checks for
// multi-games and finite Bayesian games.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "typereg/commands.h"
#include "typereg/errors.h"
#include "typereg/game_file.h"

namespace {

using typereg::CommandResult;

int Emit(const std::function<CommandResult()>& run, const std::string& format,
         bool timing) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result = run();
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  if (timing) {
    result.report["timing_ms"] = ms;
    result.lines.push_back("time: " + std::to_string(ms) + " ms");
  }
  if (format == "structured") {
    std::cout << result.report.dump(2) << "\n";
  } else {
    for (const std::string& line : result.lines) std::cout << line << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equilibrium and type-regularity checks for multi-games"};
  app.require_subcommand(1);

  std::string format = "human";
  bool timing = false;
  typereg::ExampleOptions ex;
  typereg::CommandOptions& common = ex.common;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_flag("--timing", timing, "Report wall-clock time");

  std::string game_path;
  std::string strategy_path;
  std::string example_name;

  auto* solve = app.add_subcommand("solve", "Pure and two-agent mixed Nash equilibria");
  solve->add_option("game", game_path, "normal_form game file")->required();

  auto* check = app.add_subcommand("check-regularity",
                                   "Vertex witness search and grid verification");
  check->add_option("game", game_path, "multi_game, pd_dg or own-type type_linear file")
      ->required();
  check->add_option("--grid", common.grid, "Barycentric grid resolution")
      ->capture_default_str();
  check->add_option("--seed", common.seed, "Random seed")->capture_default_str();

  auto* verify = app.add_subcommand("verify-bne",
                                    "Local-equilibrium and all-priors BNE audit");
  verify->add_option("game", game_path, "bayesian_finite game file")->required();
  verify->add_option("strategy", strategy_path, "strategy map file")->required();
  verify->add_option("--priors", common.priors, "Number of random priors")
      ->capture_default_str();
  verify->add_option("--seed", common.seed, "Random seed")->capture_default_str();

  auto* example = app.add_subcommand("example", "Run a bundled example");
  example->add_option("name", example_name, "pd, trust, markets or coordination")
      ->required();
  example->add_option("--grid", common.grid, "Barycentric grid resolution")
      ->capture_default_str();
  example->add_option("--priors", common.priors, "Number of random priors")
      ->capture_default_str();
  example->add_option("--seed", common.seed, "Random seed")->capture_default_str();
  example->add_option("--params", ex.params, "Comma-separated game parameters");
  example->add_option("--theta1", ex.theta1, "Type of agent 1");
  example->add_option("--theta2", ex.theta2, "Type of agent 2 (trust: list of types)");
  example->add_option("--belief", ex.belief, "Sender belief on the first receiver type");
  example->add_option("--sender-steps", ex.sender_steps,
                      "Trust sender grid {0, 1/N, ..., 1}")
      ->capture_default_str();

  auto* canon = app.add_subcommand("canonicalize", "Print a game file in canonical form");
  canon->add_option("game", game_path, "game file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : typereg::kExitInputError;
  }

  try {
    if (*solve) {
      return Emit([&] { return typereg::RunSolve(typereg::ReadTextFile(game_path), common); },
                  format, timing);
    }
    if (*check) {
      return Emit([&] {
        return typereg::RunCheckRegularity(typereg::ReadTextFile(game_path), common);
      }, format, timing);
    }
    if (*verify) {
      return Emit([&] {
        return typereg::RunVerifyBne(typereg::ReadTextFile(game_path),
                                     typereg::ReadTextFile(strategy_path), common);
      }, format, timing);
    }
    if (*example) {
      return Emit([&] { return typereg::RunExample(example_name, ex); }, format, timing);
    }
    if (*canon) {
      return Emit([&] { return typereg::RunCanonicalize(typereg::ReadTextFile(game_path)); },
                  format, timing);
    }
  } catch (const typereg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return typereg::kExitInputError;
  }
  return typereg::kExitInputError;
}
