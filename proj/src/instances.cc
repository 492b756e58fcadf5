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

#include "typereg/instances.h"

#include "typereg/errors.h"

namespace typereg {
namespace {

using Cells = std::vector<std::vector<std::pair<Rational, Rational>>>;

const std::vector<std::string>& Products() {
  static const std::vector<std::string> kLabels = {"s1", "s2", "s3"};
  return kLabels;
}

}  // namespace

NormalFormGame MarketGame(int j) {
  static const Cells kMarkets[3] = {
      {{{3, 4}, {6, 3}, {7, 1}}, {{2, 5}, {3, 2}, {5, 3}}, {{1, 3}, {0, 2}, {3, 0}}},
      {{{0, 4}, {0, 8}, {1, 1}}, {{6, 1}, {4, 5}, {7, 3}}, {{0, 1}, {1, 6}, {1, 3}}},
      {{{1, 0}, {1, 2}, {4, 5}}, {{0, 1}, {3, 2}, {3, 4}}, {{2, 4}, {5, 3}, {6, 7}}},
  };
  if (j < 0 || j > 2) throw InputError("market index must be 0, 1 or 2");
  return NormalFormGame::Bimatrix(kMarkets[j], Products(), Products());
}

MultiGame MarketsMultiGame() {
  return MultiGame({MarketGame(0), MarketGame(1), MarketGame(2)});
}

Witness MarketsWitness() {
  std::vector<MixedStrategy> row;
  for (int j = 0; j < 3; ++j) row.push_back(MixedStrategy::Pure(3, j));
  return Witness({row, row});
}

MultiGame PrisonersDilemmaDoubleGame() {
  return BuildPrisonersDilemmaDoubleGame(5, 3, 1, 0, 2, 0);
}

Witness PrisonersDilemmaWitness() {
  const MixedStrategy c = MixedStrategy::Pure(2, 0);
  const MixedStrategy d = MixedStrategy::Pure(2, 1);
  return Witness({{d, c}, {d, c}});
}

MultiGame CoordinationDoubleGame(const Rational& x, const Rational& y,
                                 const Rational& z, const Rational& w) {
  for (const Rational* v : {&x, &y, &z, &w}) {
    if (v->Sign() < 0) throw InputError("coordination payoffs must be nonnegative");
  }
  const std::vector<std::string> labels = {"a1", "a2"};
  return MultiGame(
      {NormalFormGame::Bimatrix({{{x, x}, {x, 0}}, {{0, x}, {y, y}}}, labels, labels),
       NormalFormGame::Bimatrix({{{z, z}, {z, 0}}, {{0, z}, {w, w}}}, labels, labels)});
}

NormalFormGame MatchingPennies() {
  return NormalFormGame::Bimatrix({{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}},
                                  {"H", "T"}, {"H", "T"});
}

TrustStageGame StandardTrustGame() {
  return TrustStageGame({0, 1}, Rational(1, 4), {0, Rational(2, 3)});
}

}  // namespace typereg
