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

// Audit of the equivalence between "local Nash equilibrium at every type
// profile" and "Bayesian equilibrium under every prior" for finite Bayesian
// games. Point-mass priors alone already separate the two sides, so the
// audit tests every point mass plus a batch of random full-support-free
// priors drawn from a recorded seed.

#ifndef TYPEREG_PRIOR_INDEPENDENCE_H_
#define TYPEREG_PRIOR_INDEPENDENCE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "typereg/game.h"

namespace typereg {

struct LocalFailure {
  Profile types;
  int agent = 0;
  int deviation = 0;
  Rational gain;
};

struct PriorIndependenceReport {
  // Side (A): the profile is a Nash equilibrium of every local game.
  bool local_nash_everywhere = true;
  std::vector<LocalFailure> local_failures;

  // Side (B): Bayesian equilibrium under every tested prior.
  bool bne_all_tested_priors = true;
  std::size_t point_mass_priors = 0;
  std::size_t point_mass_bne = 0;
  std::optional<Profile> falsifying_point_mass;
  std::size_t random_priors = 0;
  std::size_t random_bne = 0;
  std::uint64_t seed = 0;

  bool Agree() const { return local_nash_everywhere == bne_all_tested_priors; }
};

// Random prior with integer weights in [0, denominator] normalized to one.
// Zero entries are allowed; the all-zero draw is rejected and redrawn.
Prior RandomPrior(const ProfileSpace& types, std::mt19937_64& rng,
                  int denominator = 16);

PriorIndependenceReport AuditPriorIndependence(
    const FiniteBayesianGame& game, const StrategyMapProfile& strategy,
    int random_priors, std::uint64_t seed);

}  // namespace typereg

#endif  // TYPEREG_PRIOR_INDEPENDENCE_H_
