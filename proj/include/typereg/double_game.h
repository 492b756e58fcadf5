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

// Closed-form vertex-regularity conditions for double games: multi-games
// with two agents, two actions each, and two basic games.
//
// Symmetric games are parameterized as
//   G1 = (a,a) (b,c)      G2 = (e,e) (f,g)
//        (c,b) (d,d)           (g,f) (h,h)
// and general games as G1 = (a1,a2) (b1,b2) / (c1,c2) (d1,d2) with G2 built
// the same way from e..h.

#ifndef TYPEREG_DOUBLE_GAME_H_
#define TYPEREG_DOUBLE_GAME_H_

#include <array>
#include <optional>

#include "typereg/game.h"

namespace typereg {

class DoubleGame {
 public:
  DoubleGame(NormalFormGame g1, NormalFormGame g2);

  static DoubleGame Symmetric(const Rational& a, const Rational& b,
                              const Rational& c, const Rational& d,
                              const Rational& e, const Rational& f,
                              const Rational& g, const Rational& h);
  // Cell payoffs in the order (x1, x2) for x = a, b, c, d.
  static DoubleGame General(const std::array<Rational, 8>& g1,
                            const std::array<Rational, 8>& g2);

  const NormalFormGame& G1() const { return g1_; }
  const NormalFormGame& G2() const { return g2_; }
  bool IsSymmetric() const;
  MultiGame ToMultiGame() const;

  // Same games with both agents' actions swapped.
  DoubleGame Relabeled() const;

 private:
  NormalFormGame g1_;
  NormalFormGame g2_;
};

struct SymmetricConditions {
  // Table row 1..4 whose strict inequalities hold for the chosen pair of
  // pure equilibria, or nullopt. Row 1 is (a1,a1)/(a1,a1), rows 2 and 3 put
  // an asymmetric equilibrium in G2, row 4 is (a1,a1)/(a2,a2).
  std::optional<int> row;
  // Same table with every strict inequality relaxed to a weak one. These
  // weak rows are exactly the vertex-regularity conditions.
  std::optional<int> weak_row;
  // Direct check that the pure equilibria form a vertex witness.
  bool vertex_regular = false;
};

// ne_g1 and ne_g2 must be pure Nash equilibria of G1 and G2. A G1
// equilibrium at (a2,a2) is handled by relabeling actions; an asymmetric one
// falls outside the table and yields no row. Throws InputError if the game
// is not symmetric or a profile is not an equilibrium.
SymmetricConditions CheckSymmetricConditions(const DoubleGame& game,
                                             const Profile& ne_g1,
                                             const Profile& ne_g2);

struct GeneralConditions {
  bool conditions_hold = false;
  bool vertex_regular = false;
};

// ne_g1 = (s, u) and ne_g2 = (t, v) must be pure equilibria with s != t and
// u != v. Actions are relabeled so that ne_g1 = (a1,a1), ne_g2 = (a2,a2),
// then the eight weak inequalities are evaluated.
GeneralConditions CheckGeneralConditions(const DoubleGame& game,
                                         const Profile& ne_g1,
                                         const Profile& ne_g2);

}  // namespace typereg

#endif  // TYPEREG_DOUBLE_GAME_H_
