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

#include "typereg/prior_independence.h"

#include "typereg/errors.h"
#include "typereg/ne_solver.h"

namespace typereg {

Prior RandomPrior(const ProfileSpace& types, std::mt19937_64& rng,
                  int denominator) {
  if (denominator < 1) throw InputError("prior denominator must be positive");
  std::vector<long> weights(types.NumProfiles());
  long total = 0;
  while (total == 0) {
    total = 0;
    for (long& w : weights) {
      w = static_cast<long>(rng() % static_cast<std::uint64_t>(denominator + 1));
      total += w;
    }
  }
  std::vector<Rational> joint;
  for (long w : weights) joint.push_back(Rational(w, total));
  return Prior(types, std::move(joint));
}

PriorIndependenceReport AuditPriorIndependence(
    const FiniteBayesianGame& game, const StrategyMapProfile& strategy,
    int random_priors, std::uint64_t seed) {
  if (random_priors < 0) throw InputError("random prior count must be >= 0");
  ValidateStrategyMap(game, strategy);
  const ProfileSpace& types = game.Types();
  const int n = game.NumAgents();

  PriorIndependenceReport report;
  report.seed = seed;
  for (std::size_t flat = 0; flat < types.NumProfiles(); ++flat) {
    const Profile t = types.Unflatten(flat);
    MixedProfile profile;
    for (int i = 0; i < n; ++i) profile.push_back(strategy[i][t[i]]);
    if (auto dev = FindProfitableDeviation(game.LocalGame(flat), profile)) {
      report.local_nash_everywhere = false;
      report.local_failures.push_back({t, dev->agent, dev->action, dev->gain});
    }
  }

  for (std::size_t flat = 0; flat < types.NumProfiles(); ++flat) {
    const Profile t = types.Unflatten(flat);
    ++report.point_mass_priors;
    if (IsBayesNash(game, strategy, Prior::PointMass(types, t))) {
      ++report.point_mass_bne;
    } else if (!report.falsifying_point_mass) {
      report.falsifying_point_mass = t;
      report.bne_all_tested_priors = false;
    }
  }

  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_priors; ++k) {
    ++report.random_priors;
    if (IsBayesNash(game, strategy, RandomPrior(types, rng))) {
      ++report.random_bne;
    } else {
      report.bne_all_tested_priors = false;
    }
  }
  return report;
}

}  // namespace typereg
