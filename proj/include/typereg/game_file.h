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

// JSON game files. Every rational is written as a "p" or "p/q" string; JSON
// integers are accepted on input, floating-point numbers never are.
// See README.md for the grammar of each kind.

#ifndef TYPEREG_GAME_FILE_H_
#define TYPEREG_GAME_FILE_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "typereg/game.h"
#include "typereg/linear_transform.h"
#include "typereg/staged.h"

namespace typereg {

struct BayesianFile {
  FiniteBayesianGame game;
  std::optional<Prior> prior;
};

struct PdParams {
  Rational t, r, p, s, y, z;
  MultiGame Build() const { return BuildPrisonersDilemmaDoubleGame(t, r, p, s, y, z); }
};

using GameDocument =
    std::variant<NormalFormGame, MultiGame, GeneralizedMultiGame, BayesianFile,
                 TypeLinearGame, OwnTypeLinearGame, TrustStageGame, PdParams>;

// "normal_form", "multi_game", ...
std::string KindName(const GameDocument& doc);

// Throws InputError naming the JSON location of the first problem.
GameDocument ParseGameDocument(std::string_view text);
nlohmann::ordered_json SerializeGameDocument(const GameDocument& doc);

// Strategy maps: {"maps": [{"<type>": <strategy>, ...}, ...]} with one
// object per agent. A strategy is an action label (pure) or an array of
// probabilities in action order.
StrategyMapProfile ParseStrategyFile(std::string_view text,
                                     const FiniteBayesianGame& game);
nlohmann::ordered_json SerializeStrategyMaps(const FiniteBayesianGame& game,
                                             const StrategyMapProfile& maps);

// Reads a whole file; throws InputError if it cannot be opened.
std::string ReadTextFile(const std::string& path);

}  // namespace typereg

#endif  // TYPEREG_GAME_FILE_H_
