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

// Type-linear Bayesian games and their equivalent multi-game forms.
//
// A type-linear game gives, for every agent i, every agent k and every
// joint pure profile a, a coefficient vector L_ik(a) in Q^m; agent i's
// utility at raw types (t_1..t_n) is sum_k <L_ik(a), t_k>. Normalizing the
// raw types onto the simplex turns it into a generalized multi-game with
// basic payoffs u_ikj(a) = L_ik(a)_j, and into a plain multi-game when only
// L_ii is nonzero.

#ifndef TYPEREG_LINEAR_TRANSFORM_H_
#define TYPEREG_LINEAR_TRANSFORM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "typereg/game.h"

namespace typereg {

using RawType = std::vector<Rational>;

// Divides by the coordinate sum. Throws InputError on a zero vector or a
// negative component.
SimplexPoint NormalizeType(std::span<const Rational> raw);

class TypeLinearGame {
 public:
  TypeLinearGame() = default;
  // coeff[i][k][flat profile] is L_ik(a), each of length m. raw_types[i]
  // lists agent i's raw type vectors; empty means the whole simplex.
  TypeLinearGame(ActionSpace actions, int dimension,
                 std::vector<std::vector<std::vector<std::vector<Rational>>>> coeff,
                 std::vector<std::vector<RawType>> raw_types = {});

  int NumAgents() const { return actions_.NumAgents(); }
  int Dimension() const { return dimension_; }
  const ActionSpace& Actions() const { return actions_; }
  const std::vector<Rational>& Coefficient(int i, int k, std::size_t flat) const {
    return coeff_[i][k][flat];
  }
  const std::vector<std::vector<RawType>>& RawTypes() const { return raw_types_; }

  // Linear utility at arbitrary nonnegative type vectors (raw or normalized).
  Rational Utility(int agent, const Profile& actions,
                   const std::vector<RawType>& types) const;

 private:
  ActionSpace actions_;
  int dimension_ = 0;
  std::vector<std::vector<std::vector<std::vector<Rational>>>> coeff_;
  std::vector<std::vector<RawType>> raw_types_;
};

// Own-type-linear special case: only L_ii is stored.
class OwnTypeLinearGame {
 public:
  OwnTypeLinearGame() = default;
  // coeff[i][flat profile] is L_ii(a), each of length m.
  OwnTypeLinearGame(ActionSpace actions, int dimension,
                    std::vector<std::vector<std::vector<Rational>>> coeff,
                    std::vector<std::vector<RawType>> raw_types = {});

  int NumAgents() const { return actions_.NumAgents(); }
  int Dimension() const { return dimension_; }
  const ActionSpace& Actions() const { return actions_; }
  const std::vector<Rational>& Coefficient(int i, std::size_t flat) const {
    return coeff_[i][flat];
  }
  const std::vector<std::vector<RawType>>& RawTypes() const { return raw_types_; }

  Rational Utility(int agent, const Profile& actions,
                   const std::vector<RawType>& types) const;

  // The same game with zero cross-agent coefficients.
  TypeLinearGame AsTypeLinear() const;

  friend bool operator==(const OwnTypeLinearGame&,
                         const OwnTypeLinearGame&) = default;

 private:
  ActionSpace actions_;
  int dimension_ = 0;
  std::vector<std::vector<std::vector<Rational>>> coeff_;
  std::vector<std::vector<RawType>> raw_types_;
};

GeneralizedMultiGame ToGeneralizedMultiGame(const TypeLinearGame& game);
MultiGame ToMultiGame(const OwnTypeLinearGame& game);
// Inverse of ToMultiGame: reads L_ii(a)_j back out of the basic games.
OwnTypeLinearGame ToCoefficientForm(const MultiGame& game);

// Explicit conversion to opaque-label form. Every agent needs a finite type
// space; labels are the printed simplex points.
FiniteBayesianGame ToFiniteBayesianGame(const MultiGame& game);

struct EquivalenceViolation {
  int agent = 0;
  Profile actions;
  TypeProfile types;
  Rational original;
  Rational transformed;
};

struct EquivalenceReport {
  std::size_t checks = 0;
  std::vector<EquivalenceViolation> violations;
  bool Ok() const { return violations.empty(); }
};

// Compares utilities of both representations at every joint pure profile
// and every supplied simplex type profile.
EquivalenceReport AuditEquivalence(const TypeLinearGame& original,
                                   const GeneralizedMultiGame& transformed,
                                   std::span<const TypeProfile> samples);
EquivalenceReport AuditEquivalence(const OwnTypeLinearGame& original,
                                   const MultiGame& transformed,
                                   std::span<const TypeProfile> samples);

// All m^n joint vertex type profiles.
std::vector<TypeProfile> VertexTypeProfiles(int num_agents, int dimension);

// Random simplex point with denominator 'denominator': integer weights in
// [0, denominator] (not all zero) normalized.
SimplexPoint RandomSimplexPoint(int dimension, std::mt19937_64& rng,
                                int denominator = 12);
std::vector<TypeProfile> RandomTypeProfiles(int num_agents, int dimension,
                                            int count, std::uint64_t seed);

}  // namespace typereg

#endif  // TYPEREG_LINEAR_TRANSFORM_H_
