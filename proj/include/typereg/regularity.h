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

// Type-regularity of multi-games.
//
// A witness assigns every agent a mixed strategy at each simplex vertex. If
// the vertex strategies form a Nash equilibrium of every vertex local game,
// their barycentric extension sigma(theta) = sum_j theta_j sigma(v_j) is an
// equilibrium of every local game, so the extended map is a Bayesian
// equilibrium under any prior. SearchVertexWitness finds such witnesses;
// VerifyTypeRegularity re-checks the extension on exact barycentric grids.

#ifndef TYPEREG_REGULARITY_H_
#define TYPEREG_REGULARITY_H_

#include <optional>
#include <string>
#include <vector>

#include "typereg/game.h"

namespace typereg {

class Witness {
 public:
  Witness() = default;
  // values[agent][vertex]. Throws InputError on an empty or ragged table.
  explicit Witness(std::vector<std::vector<MixedStrategy>> values);

  int NumAgents() const { return static_cast<int>(values_.size()); }
  int Dimension() const { return static_cast<int>(values_.front().size()); }
  const MixedStrategy& At(int agent, int vertex) const {
    return values_.at(agent).at(vertex);
  }
  const std::vector<std::vector<MixedStrategy>>& Values() const { return values_; }

  // Extended witness evaluated at every agent's type.
  MixedProfile Extend(const TypeProfile& types) const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<std::vector<MixedStrategy>> values_;
};

// sum_j theta_j * witness(agent, v_j). Always a valid mixed strategy.
MixedStrategy ExtendWitness(const Witness& witness, int agent,
                            const SimplexPoint& type);

enum class RegularityStatus { kCertified, kRefuted, kInconclusive };

std::string ToString(RegularityStatus status);

struct RegularityViolation {
  TypeProfile types;
  int agent = 0;
  int deviation = 0;
  Rational gain;
};

struct RegularityReport {
  RegularityStatus status = RegularityStatus::kInconclusive;
  std::optional<Witness> witness;
  // For a refuted search these refer to the closest candidate witness.
  std::vector<RegularityViolation> violations;
  std::size_t profiles_checked = 0;
  std::string note;
};

// Backtracking search for a witness over V^n. Candidates per agent and
// vertex are the pure actions plus, for two-agent games, every mixed
// equilibrium component found by support enumeration of the vertex games.
// Refuted only when that candidate set is provably complete (two agents,
// nondegenerate vertex games); otherwise a failed search is inconclusive.
RegularityReport SearchVertexWitness(const MultiGame& game);

// Every point of the simplex with coordinates k_j / resolution, in
// lexicographic order of (k_1, ..., k_m).
std::vector<SimplexPoint> SimplexGrid(int dimension, int resolution);

enum class Region {
  kVertices,  // V^n
  kBoundary,  // union over i of grid_i x V^(n-1)
  kFullGrid,  // grid^n
};

// Checks that the extended witness is a Nash equilibrium of the exact local
// game at every type profile of 'region' built from the barycentric grid of
// the given resolution. Violations are listed in enumeration order.
RegularityReport VerifyTypeRegularity(const MultiGame& game,
                                      const Witness& witness, int resolution,
                                      Region region = Region::kFullGrid);

}  // namespace typereg

#endif  // TYPEREG_REGULARITY_H_
