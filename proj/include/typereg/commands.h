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

// Command implementations behind the typereg executable. Each command takes
// file contents rather than paths and returns a report, human-readable
// lines and an exit code, so the same code is exercised by the tests.

#ifndef TYPEREG_COMMANDS_H_
#define TYPEREG_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace typereg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInputError = 2;

struct CommandOptions {
  int grid = 10;
  int priors = 64;
  std::uint64_t seed = 0;
};

struct ExampleOptions {
  CommandOptions common;
  bool grid_given = false;
  std::optional<std::string> params;
  std::optional<std::string> theta1;
  std::optional<std::string> theta2;
  std::optional<std::string> belief;
  int sender_steps = 1;
};

struct CommandResult {
  nlohmann::ordered_json report;
  std::vector<std::string> lines;
  int exit_code = kExitOk;
};

// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string Fnv1a64(const std::string& bytes);

CommandResult RunSolve(const std::string& game_text, const CommandOptions& options);
CommandResult RunCheckRegularity(const std::string& game_text,
                                 const CommandOptions& options);
CommandResult RunVerifyBne(const std::string& game_text,
                           const std::string& strategy_text,
                           const CommandOptions& options);
// name is one of pd, trust, markets, coordination.
CommandResult RunExample(const std::string& name, const ExampleOptions& options);
CommandResult RunCanonicalize(const std::string& game_text);

}  // namespace typereg

#endif  // TYPEREG_COMMANDS_H_
