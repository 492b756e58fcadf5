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

#include "typereg/game_file.h"

#include <string>

#include "doctest.h"
#include "typereg/errors.h"
#include "typereg/instances.h"
#include "typereg/linear_transform.h"

namespace typereg {
namespace {

std::string Data(const std::string& name) {
  return ReadTextFile(std::string(TYPEREG_DATA_DIR) + "/" + name);
}

template <typename T>
T ParseAs(const std::string& text) {
  const GameDocument doc = ParseGameDocument(text);
  REQUIRE(std::holds_alternative<T>(doc));
  return std::get<T>(doc);
}

std::string ErrorOf(const std::string& text) {
  try {
    ParseGameDocument(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("bundled files match the built-in instances") {
  CHECK(ParseAs<MultiGame>(Data("markets.json")) == MarketsMultiGame());
  CHECK(ParseAs<NormalFormGame>(Data("market_m3.json")) == MarketGame(2));
  CHECK(ParseAs<PdParams>(Data("pd.json")).Build() == PrisonersDilemmaDoubleGame());
  CHECK(ParseAs<MultiGame>(Data("pd_multi_game.json")) == PrisonersDilemmaDoubleGame());
  CHECK(ParseAs<NormalFormGame>(Data("matching_pennies.json")) == MatchingPennies());

  const TrustStageGame trust = ParseAs<TrustStageGame>(Data("trust.json"));
  const TrustStageGame standard = StandardTrustGame();
  CHECK(trust.SenderActions() == standard.SenderActions());
  CHECK(trust.SenderType() == standard.SenderType());
  CHECK(trust.ReceiverTypes() == standard.ReceiverTypes());
  CHECK(trust.ReceiverStep() == standard.ReceiverStep());
}

TEST_CASE("coordination file is the double game restricted to the corners") {
  const BayesianFile file = ParseAs<BayesianFile>(Data("coordination.json"));
  const FiniteBayesianGame expected = ToFiniteBayesianGame(MultiGame(
      CoordinationDoubleGame(2, 1, 3, 1).BasicGames(),
      std::vector<TypeSpace>(2, TypeSpace::Finite({SimplexPoint::Vertex(2, 0),
                                                   SimplexPoint::Vertex(2, 1)}))));
  for (std::size_t flat = 0; flat < expected.Types().NumProfiles(); ++flat) {
    CHECK(file.game.LocalGame(flat).PayoffTable(0) == expected.LocalGame(flat).PayoffTable(0));
    CHECK(file.game.LocalGame(flat).PayoffTable(1) == expected.LocalGame(flat).PayoffTable(1));
  }
  REQUIRE(file.prior);
  CHECK(file.prior->Joint() == Prior::Uniform(file.game.Types()).Joint());
}

TEST_CASE("strategy files resolve labels and mixed entries") {
  const BayesianFile file = ParseAs<BayesianFile>(Data("coordination.json"));
  const StrategyMapProfile maps =
      ParseStrategyFile(Data("coordination_corrupted.json"), file.game);
  CHECK(maps[0][0] == MixedStrategy::Pure(2, 1));
  CHECK(maps[1][1] == MixedStrategy::Uniform(2));
  CHECK_THROWS_AS(ParseStrategyFile(R"({"maps":[{"selfish":"a1"},{"selfish":"a1","social":"a1"}]})",
                                    file.game),
                  InputError);
  CHECK_THROWS_AS(ParseStrategyFile(R"({"maps":[{"selfish":"a3","social":"a1"},{"selfish":"a1","social":"a1"}]})",
                                    file.game),
                  InputError);
}

TEST_CASE("round trip preserves every bundled document") {
  for (const char* name : {"markets.json", "market_m3.json", "pd.json", "pd_multi_game.json",
                           "trust.json", "coordination.json", "matching_pennies.json",
                           "adversarial.json", "own_type_linear.json"}) {
    CAPTURE(name);
    const GameDocument doc = ParseGameDocument(Data(name));
    const std::string once = SerializeGameDocument(doc).dump();
    const GameDocument again = ParseGameDocument(once);
    CHECK(KindName(again) == KindName(doc));
    CHECK(SerializeGameDocument(again).dump() == once);
  }
}

TEST_CASE("own-type linear file keeps raw types and converts exactly") {
  const OwnTypeLinearGame g = ParseAs<OwnTypeLinearGame>(Data("own_type_linear.json"));
  CHECK(g.RawTypes()[0].size() == 3);
  CHECK(g.RawTypes()[0][0] == RawType{4, 0});
  CHECK(g.RawTypes()[1].empty());
  // Coefficients are the PD double game written in coefficient form.
  CHECK(ToMultiGame(g).BasicGames() == PrisonersDilemmaDoubleGame().BasicGames());
}

TEST_CASE("missing payoff cell is named") {
  const std::string message = ErrorOf(Data("missing_cell.json"));
  CHECK(message.find("T,T") != std::string::npos);
}

TEST_CASE("errors carry a field path") {
  CHECK(ErrorOf(R"({"kind":"normal_form","actions":[1,1],"payoffs":{"0,0":[1,0.5]}})")
            .find("$.payoffs[\"0,0\"][1]") != std::string::npos);
  CHECK(ErrorOf(R"({"kind":"normal_form","actions":[1,1],"payoffs":{"0,0":["1/0",1]}})")
            .find("$.payoffs") != std::string::npos);
  CHECK(ErrorOf(R"({"kind":"normal_form","actions":[1,1],"payoffs":{"0,0":[1,1]},"extra":1})")
            .find("unknown field \"extra\"") != std::string::npos);
  CHECK(ErrorOf(R"({"kind":"sudoku"})").find("unknown game kind") != std::string::npos);
  CHECK(ErrorOf(R"({"kind":"normal_form",)").find("syntax error") != std::string::npos);
  CHECK(ErrorOf(R"({"kind":"pd_dg","t":5,"r":3,"p":1,"s":0,"y":0,"z":0})")
            .find("y>z violated") != std::string::npos);
  CHECK(ErrorOf(R"({"kind":"normal_form","actions":[["a,b","c"],1],"payoffs":{}})")
            .find("comma") != std::string::npos);
}

TEST_CASE("rationals are exact strings or integers") {
  const NormalFormGame g = ParseAs<NormalFormGame>(
      R"({"kind":"normal_form","actions":[1,1],"payoffs":{"0,0":["-7/21","123456789012345678901234567890"]}})");
  CHECK(g.Payoff(0, 0) == Rational(-1, 3));
  CHECK(g.Payoff(1, 0).ToString() == "123456789012345678901234567890");
  const std::string text = SerializeGameDocument(GameDocument(g)).dump();
  CHECK(text.find("\"-1/3\"") != std::string::npos);
}

}  // namespace
}  // namespace typereg
