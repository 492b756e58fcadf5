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

// Nash equilibrium verification and enumeration for small finite games.
// Everything is exact: a profile either is or is not an equilibrium.

#ifndef TYPEREG_NE_SOLVER_H_
#define TYPEREG_NE_SOLVER_H_

#include <optional>
#include <span>
#include <vector>

#include "typereg/game.h"

namespace typereg {

// Pure actions of 'agent' maximizing its expected payoff against the other
// entries of 'profile'. Never empty.
std::vector<int> BestResponseSet(const NormalFormGame& game, int agent,
                                 std::span<const MixedStrategy> profile);

struct Deviation {
  int agent = 0;
  int action = 0;
  // Payoff of the deviation minus the payoff of the profile; always > 0.
  Rational gain;
};

// Largest profitable pure deviation (lowest agent, then lowest action on
// ties), or nullopt if the profile is a Nash equilibrium.
std::optional<Deviation> FindProfitableDeviation(
    const NormalFormGame& game, std::span<const MixedStrategy> profile);

bool IsNash(const NormalFormGame& game, std::span<const MixedStrategy> profile);

struct Equilibrium {
  MixedProfile profile;
  bool pure = false;
};

struct NEResult {
  std::vector<Equilibrium> equilibria;
  // Set when some support pair admits a continuum of solutions or a found
  // equilibrium has more best responses than its support size. The list is
  // then not guaranteed to be complete.
  bool degenerate = false;
};

// Exhaustive scan over all joint pure profiles, in flattened order.
NEResult EnumeratePureNash(const NormalFormGame& game);

// All equilibria of a two-agent game on equal-size support pairs, ordered
// lexicographically by (row support, column support). When the game is
// degenerate the extreme equilibria (vertex pairs of the best-response
// polytopes) are added, so the list is never empty. Throws InputError if the
// game does not have exactly two agents.
NEResult SupportEnumeration(const NormalFormGame& game);

}  // namespace typereg

#endif  // TYPEREG_NE_SOLVER_H_
