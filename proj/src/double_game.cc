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

#include "typereg/double_game.h"

#include <utility>

#include "typereg/errors.h"
#include "typereg/ne_solver.h"
#include "typereg/regularity.h"

namespace typereg {
namespace {

void CheckTwoByTwo(const NormalFormGame& g) {
  if (g.NumAgents() != 2 || g.Actions().Count(0) != 2 ||
      g.Actions().Count(1) != 2) {
    throw InputError("double game components must be 2x2 two-agent games");
  }
}

NormalFormGame SwapActions(const NormalFormGame& g) {
  return NormalFormGame::FromFunction(
      g.Actions(), [&](int agent, const Profile& p) {
        return g.Payoff(agent, Profile{1 - p[0], 1 - p[1]});
      });
}

NormalFormGame SwapActionsOf(const NormalFormGame& g, int who) {
  return NormalFormGame::FromFunction(
      g.Actions(), [&](int agent, const Profile& p) {
        Profile q = p;
        q[who] = 1 - q[who];
        return g.Payoff(agent, q);
      });
}

void CheckPureNash(const NormalFormGame& g, const Profile& p,
                   const char* name) {
  if (p.size() != 2 || p[0] < 0 || p[0] > 1 || p[1] < 0 || p[1] > 1) {
    throw InputError(std::string(name) + " must be a pure profile of a 2x2 game");
  }
  if (!IsNash(g, PureProfile(g.Actions(), p))) {
    throw InputError(std::string(name) + " is not a Nash equilibrium");
  }
}

bool PureWitnessHolds(const DoubleGame& game, const Profile& ne_g1,
                      const Profile& ne_g2) {
  Witness w({{MixedStrategy::Pure(2, ne_g1[0]), MixedStrategy::Pure(2, ne_g2[0])},
             {MixedStrategy::Pure(2, ne_g1[1]), MixedStrategy::Pure(2, ne_g2[1])}});
  return VerifyTypeRegularity(game.ToMultiGame(), w, 1, Region::kVertices)
      .violations.empty();
}

}  // namespace

DoubleGame::DoubleGame(NormalFormGame g1, NormalFormGame g2)
    : g1_(std::move(g1)), g2_(std::move(g2)) {
  CheckTwoByTwo(g1_);
  CheckTwoByTwo(g2_);
  if (!g1_.Actions().SameShape(g2_.Actions())) {
    throw InputError("double game components must share action sets");
  }
}

DoubleGame DoubleGame::Symmetric(const Rational& a, const Rational& b,
                                 const Rational& c, const Rational& d,
                                 const Rational& e, const Rational& f,
                                 const Rational& g, const Rational& h) {
  return DoubleGame(NormalFormGame::Bimatrix({{{a, a}, {b, c}}, {{c, b}, {d, d}}},
                                             {"a1", "a2"}, {"a1", "a2"}),
                    NormalFormGame::Bimatrix({{{e, e}, {f, g}}, {{g, f}, {h, h}}},
                                             {"a1", "a2"}, {"a1", "a2"}));
}

DoubleGame DoubleGame::General(const std::array<Rational, 8>& g1,
                               const std::array<Rational, 8>& g2) {
  auto build = [](const std::array<Rational, 8>& x) {
    return NormalFormGame::Bimatrix({{{x[0], x[1]}, {x[2], x[3]}},
                                     {{x[4], x[5]}, {x[6], x[7]}}},
                                    {"a1", "a2"}, {"a1", "a2"});
  };
  return DoubleGame(build(g1), build(g2));
}

bool DoubleGame::IsSymmetric() const {
  for (const NormalFormGame* g : {&g1_, &g2_}) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (g->Payoff(0, Profile{r, c}) != g->Payoff(1, Profile{c, r})) {
          return false;
        }
      }
    }
  }
  return true;
}

MultiGame DoubleGame::ToMultiGame() const { return MultiGame({g1_, g2_}); }

DoubleGame DoubleGame::Relabeled() const {
  return DoubleGame(SwapActions(g1_), SwapActions(g2_));
}

SymmetricConditions CheckSymmetricConditions(const DoubleGame& game,
                                             const Profile& ne_g1,
                                             const Profile& ne_g2) {
  if (!game.IsSymmetric()) throw InputError("double game is not symmetric");
  CheckPureNash(game.G1(), ne_g1, "G1 equilibrium");
  CheckPureNash(game.G2(), ne_g2, "G2 equilibrium");

  SymmetricConditions out;
  out.vertex_regular = PureWitnessHolds(game, ne_g1, ne_g2);

  DoubleGame g = game;
  Profile p1 = ne_g1;
  Profile p2 = ne_g2;
  if (p1 == Profile{1, 1}) {
    g = game.Relabeled();
    p1 = {0, 0};
    p2 = {1 - p2[0], 1 - p2[1]};
  }
  if (p1 != Profile{0, 0}) return out;

  const NormalFormGame& G1 = g.G1();
  const NormalFormGame& G2 = g.G2();
  const Rational& a = G1.Payoff(0, Profile{0, 0});
  const Rational& b = G1.Payoff(0, Profile{0, 1});
  const Rational& c = G1.Payoff(0, Profile{1, 0});
  const Rational& d = G1.Payoff(0, Profile{1, 1});
  const Rational& e = G2.Payoff(0, Profile{0, 0});
  const Rational& f = G2.Payoff(0, Profile{0, 1});
  const Rational& gg = G2.Payoff(0, Profile{1, 0});
  const Rational& h = G2.Payoff(0, Profile{1, 1});

  const int row = 1 + 2 * p2[0] + p2[1];
  auto holds = [&](bool strict) {
    auto gt = [strict](const Rational& x, const Rational& y) {
      return strict ? x > y : x >= y;
    };
    switch (row) {
      case 1:
        return gt(a, c) && gt(e, gg);
      case 2:
      case 3:
        return gt(a, c) && gt(b, d) && e == gg && gt(f, h);
      default:
        return gt(a, c) && gt(b, d) && gt(gg, e) && gt(h, f);
    }
  };
  if (holds(true)) out.row = row;
  if (holds(false)) out.weak_row = row;
  return out;
}

GeneralConditions CheckGeneralConditions(const DoubleGame& game,
                                         const Profile& ne_g1,
                                         const Profile& ne_g2) {
  CheckPureNash(game.G1(), ne_g1, "G1 equilibrium");
  CheckPureNash(game.G2(), ne_g2, "G2 equilibrium");
  if (ne_g1[0] == ne_g2[0] || ne_g1[1] == ne_g2[1]) {
    throw InputError(
        "the two equilibria must use different actions for each agent");
  }
  GeneralConditions out;
  out.vertex_regular = PureWitnessHolds(game, ne_g1, ne_g2);

  NormalFormGame G1 = game.G1();
  NormalFormGame G2 = game.G2();
  for (int who = 0; who < 2; ++who) {
    if (ne_g1[who] == 1) {
      G1 = SwapActionsOf(G1, who);
      G2 = SwapActionsOf(G2, who);
    }
  }
  auto u = [](const NormalFormGame& g, int agent, int r, int c) {
    return g.Payoff(agent, Profile{r, c});
  };
  // a = (a1,a1), b = (a1,a2), c = (a2,a1), d = (a2,a2); e..h likewise in G2.
  out.conditions_hold =
      u(G1, 0, 0, 0) >= u(G1, 0, 1, 0) && u(G2, 0, 1, 1) >= u(G2, 0, 0, 1) &&
      u(G1, 0, 0, 1) >= u(G1, 0, 1, 1) && u(G2, 0, 1, 0) >= u(G2, 0, 0, 0) &&
      u(G1, 1, 0, 0) >= u(G1, 1, 0, 1) && u(G2, 1, 1, 1) >= u(G2, 1, 1, 0) &&
      u(G2, 1, 0, 1) >= u(G2, 1, 0, 0) && u(G1, 1, 1, 0) >= u(G1, 1, 1, 1);
  return out;
}

}  // namespace typereg
