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

// Games used throughout the examples, tests and CLI.

#ifndef TYPEREG_INSTANCES_H_
#define TYPEREG_INSTANCES_H_

#include "typereg/game.h"
#include "typereg/regularity.h"
#include "typereg/staged.h"

namespace typereg {

// Market j in {0,1,2} of the three-market production example. Actions are
// the products s1, s2, s3.
NormalFormGame MarketGame(int j);
// Two firms investing across the three markets, full simplex types.
MultiGame MarketsMultiGame();
// Firm i plays s_j when fully invested in market j.
Witness MarketsWitness();

// Prisoner's Dilemma blended with the cooperation-rewarding social game.
MultiGame PrisonersDilemmaDoubleGame();  // parameters (5,3,1,0,2,0)
// D when fully selfish, C when fully prosocial.
Witness PrisonersDilemmaWitness();

// Coordination double game with G1 = (x,x) (x,0) / (0,x) (y,y) and G2 the
// same with z, w. Parameters must be nonnegative.
MultiGame CoordinationDoubleGame(const Rational& x, const Rational& y,
                                 const Rational& z, const Rational& w);

NormalFormGame MatchingPennies();

// Sender grid {0,1}, sender type 1/4, receiver types {0, 2/3}.
TrustStageGame StandardTrustGame();

}  // namespace typereg

#endif  // TYPEREG_INSTANCES_H_
