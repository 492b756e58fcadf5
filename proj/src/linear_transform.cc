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

#include "typereg/linear_transform.h"

#include <utility>

#include "typereg/errors.h"

namespace typereg {
namespace {

void CheckRawTypes(const std::vector<std::vector<RawType>>& raw_types,
                   int num_agents, int dimension) {
  if (raw_types.empty()) return;
  if (static_cast<int>(raw_types.size()) != num_agents) {
    throw InputError("expected one raw type list per agent");
  }
  for (const auto& list : raw_types) {
    for (const RawType& t : list) {
      if (static_cast<int>(t.size()) != dimension) {
        throw InputError("raw type vector has wrong dimension");
      }
      NormalizeType(t);  // validates sign and nonzero
    }
  }
}

void CheckCoefficientVector(const std::vector<Rational>& v, int dimension) {
  if (static_cast<int>(v.size()) != dimension) {
    throw InputError("coefficient vector has " + std::to_string(v.size()) +
                     " entries, expected " + std::to_string(dimension));
  }
}

Rational DotVec(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total;
  for (std::size_t j = 0; j < a.size(); ++j) total += a[j] * b[j];
  return total;
}

void CheckTypeArgs(const std::vector<RawType>& types, int num_agents,
                   int dimension) {
  if (static_cast<int>(types.size()) != num_agents) {
    throw InputError("type profile has wrong agent count");
  }
  for (const RawType& t : types) {
    if (static_cast<int>(t.size()) != dimension) {
      throw InputError("type vector has wrong dimension");
    }
  }
}

std::vector<TypeSpace> NormalizedSpaces(
    const std::vector<std::vector<RawType>>& raw_types) {
  std::vector<TypeSpace> spaces;
  for (const auto& list : raw_types) {
    if (list.empty()) {
      spaces.push_back(TypeSpace::FullSimplex());
      continue;
    }
    std::vector<SimplexPoint> points;
    for (const RawType& t : list) points.push_back(NormalizeType(t));
    spaces.push_back(TypeSpace::Finite(std::move(points), list));
  }
  return spaces;
}

std::vector<RawType> AsRaw(const TypeProfile& types) {
  std::vector<RawType> out;
  for (const SimplexPoint& t : types) out.push_back(t.Coords());
  return out;
}

}  // namespace

SimplexPoint NormalizeType(std::span<const Rational> raw) {
  Rational total;
  for (const Rational& x : raw) {
    if (x.Sign() < 0) throw InputError("type vector with negative component");
    total += x;
  }
  if (total.IsZero()) throw InputError("type vector is zero");
  std::vector<Rational> coords;
  for (const Rational& x : raw) coords.push_back(x / total);
  return SimplexPoint(std::move(coords));
}

// TypeLinearGame -------------------------------------------------------------

TypeLinearGame::TypeLinearGame(
    ActionSpace actions, int dimension,
    std::vector<std::vector<std::vector<std::vector<Rational>>>> coeff,
    std::vector<std::vector<RawType>> raw_types)
    : actions_(std::move(actions)),
      dimension_(dimension),
      coeff_(std::move(coeff)),
      raw_types_(std::move(raw_types)) {
  if (dimension_ < 1) throw InputError("type dimension must be at least 1");
  const int n = actions_.NumAgents();
  if (static_cast<int>(coeff_.size()) != n) {
    throw InputError("expected coefficients for every agent");
  }
  for (const auto& per_i : coeff_) {
    if (static_cast<int>(per_i.size()) != n) {
      throw InputError("expected coefficients L_ik for every agent pair");
    }
    for (const auto& per_k : per_i) {
      if (per_k.size() != actions_.NumProfiles()) {
        throw InputError("coefficient table is missing profiles");
      }
      for (const auto& v : per_k) CheckCoefficientVector(v, dimension_);
    }
  }
  CheckRawTypes(raw_types_, n, dimension_);
}

Rational TypeLinearGame::Utility(int agent, const Profile& actions,
                                 const std::vector<RawType>& types) const {
  CheckTypeArgs(types, NumAgents(), dimension_);
  const std::size_t flat = actions_.Flatten(actions);
  Rational total;
  for (int k = 0; k < NumAgents(); ++k) {
    total += DotVec(coeff_.at(agent)[k][flat], types[k]);
  }
  return total;
}

// OwnTypeLinearGame ----------------------------------------------------------

OwnTypeLinearGame::OwnTypeLinearGame(
    ActionSpace actions, int dimension,
    std::vector<std::vector<std::vector<Rational>>> coeff,
    std::vector<std::vector<RawType>> raw_types)
    : actions_(std::move(actions)),
      dimension_(dimension),
      coeff_(std::move(coeff)),
      raw_types_(std::move(raw_types)) {
  if (dimension_ < 1) throw InputError("type dimension must be at least 1");
  if (static_cast<int>(coeff_.size()) != actions_.NumAgents()) {
    throw InputError("expected coefficients for every agent");
  }
  for (const auto& per_i : coeff_) {
    if (per_i.size() != actions_.NumProfiles()) {
      throw InputError("coefficient table is missing profiles");
    }
    for (const auto& v : per_i) CheckCoefficientVector(v, dimension_);
  }
  CheckRawTypes(raw_types_, actions_.NumAgents(), dimension_);
}

Rational OwnTypeLinearGame::Utility(int agent, const Profile& actions,
                                    const std::vector<RawType>& types) const {
  CheckTypeArgs(types, NumAgents(), dimension_);
  return DotVec(coeff_.at(agent)[actions_.Flatten(actions)], types[agent]);
}

TypeLinearGame OwnTypeLinearGame::AsTypeLinear() const {
  const int n = NumAgents();
  std::vector<std::vector<std::vector<std::vector<Rational>>>> full(
      n, std::vector<std::vector<std::vector<Rational>>>(
             n, std::vector<std::vector<Rational>>(
                    actions_.NumProfiles(), std::vector<Rational>(dimension_))));
  for (int i = 0; i < n; ++i) full[i][i] = coeff_[i];
  return TypeLinearGame(actions_, dimension_, std::move(full), raw_types_);
}

// Transforms -----------------------------------------------------------------

GeneralizedMultiGame ToGeneralizedMultiGame(const TypeLinearGame& game) {
  const int n = game.NumAgents();
  const int m = game.Dimension();
  std::vector<std::vector<NormalFormGame>> basic(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < m; ++j) {
      basic[k].push_back(NormalFormGame::FromFunction(
          game.Actions(), [&](int i, const Profile& a) {
            return game.Coefficient(i, k, game.Actions().Flatten(a))[j];
          }));
    }
  }
  return GeneralizedMultiGame(std::move(basic),
                              game.RawTypes().empty()
                                  ? std::vector<TypeSpace>{}
                                  : NormalizedSpaces(game.RawTypes()));
}

MultiGame ToMultiGame(const OwnTypeLinearGame& game) {
  std::vector<NormalFormGame> basic;
  for (int j = 0; j < game.Dimension(); ++j) {
    basic.push_back(NormalFormGame::FromFunction(
        game.Actions(), [&](int i, const Profile& a) {
          return game.Coefficient(i, game.Actions().Flatten(a))[j];
        }));
  }
  return MultiGame(std::move(basic), game.RawTypes().empty()
                                         ? std::vector<TypeSpace>{}
                                         : NormalizedSpaces(game.RawTypes()));
}

OwnTypeLinearGame ToCoefficientForm(const MultiGame& game) {
  const int n = game.NumAgents();
  const int m = game.Dimension();
  std::vector<std::vector<std::vector<Rational>>> coeff(
      n, std::vector<std::vector<Rational>>(game.Actions().NumProfiles(),
                                            std::vector<Rational>(m)));
  for (int i = 0; i < n; ++i) {
    for (std::size_t flat = 0; flat < game.Actions().NumProfiles(); ++flat) {
      for (int j = 0; j < m; ++j) coeff[i][flat][j] = game.Basic(j).Payoff(i, flat);
    }
  }
  std::vector<std::vector<RawType>> raw;
  bool any_finite = false;
  for (int i = 0; i < n; ++i) any_finite |= !game.Types(i).full_simplex;
  if (any_finite) {
    for (int i = 0; i < n; ++i) {
      const TypeSpace& space = game.Types(i);
      std::vector<RawType> list;
      if (!space.raw.empty()) {
        list = space.raw;
      } else {
        for (const SimplexPoint& p : space.points) list.push_back(p.Coords());
      }
      raw.push_back(std::move(list));
    }
  }
  return OwnTypeLinearGame(game.Actions(), m, std::move(coeff), std::move(raw));
}

FiniteBayesianGame ToFiniteBayesianGame(const MultiGame& game) {
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i < game.NumAgents(); ++i) {
    const TypeSpace& space = game.Types(i);
    if (space.full_simplex) {
      throw InputError("agent " + std::to_string(i) +
                       " has the full simplex as type space; a finite Bayesian "
                       "game needs finite type sets");
    }
    std::vector<std::string> l;
    for (const SimplexPoint& p : space.points) l.push_back(p.ToString());
    labels.push_back(std::move(l));
  }
  ProfileSpace types(std::move(labels));
  std::vector<NormalFormGame> local;
  for (std::size_t flat = 0; flat < types.NumProfiles(); ++flat) {
    const Profile idx = types.Unflatten(flat);
    TypeProfile theta;
    for (int i = 0; i < game.NumAgents(); ++i) {
      theta.push_back(game.Types(i).points[idx[i]]);
    }
    local.push_back(game.LocalGame(theta));
  }
  return FiniteBayesianGame(std::move(types), std::move(local));
}

namespace {

template <typename Original, typename Transformed>
EquivalenceReport Audit(const Original& original, const Transformed& transformed,
                        std::span<const TypeProfile> samples) {
  if (!original.Actions().SameShape(transformed.Actions())) {
    throw InputError("games in an equivalence audit must share the action space");
  }
  EquivalenceReport report;
  const ActionSpace& actions = original.Actions();
  for (const TypeProfile& types : samples) {
    const std::vector<RawType> raw = AsRaw(types);
    for (std::size_t flat = 0; flat < actions.NumProfiles(); ++flat) {
      const Profile a = actions.Unflatten(flat);
      for (int i = 0; i < original.NumAgents(); ++i) {
        ++report.checks;
        Rational lhs = original.Utility(i, a, raw);
        Rational rhs = transformed.Utility(i, a, types);
        if (lhs != rhs) {
          report.violations.push_back(
              {i, a, types, std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  return report;
}

}  // namespace

EquivalenceReport AuditEquivalence(const TypeLinearGame& original,
                                   const GeneralizedMultiGame& transformed,
                                   std::span<const TypeProfile> samples) {
  return Audit(original, transformed, samples);
}

EquivalenceReport AuditEquivalence(const OwnTypeLinearGame& original,
                                   const MultiGame& transformed,
                                   std::span<const TypeProfile> samples) {
  return Audit(original, transformed, samples);
}

std::vector<TypeProfile> VertexTypeProfiles(int num_agents, int dimension) {
  ProfileSpace space(std::vector<int>(num_agents, dimension));
  std::vector<TypeProfile> out;
  for (std::size_t flat = 0; flat < space.NumProfiles(); ++flat) {
    TypeProfile profile;
    for (int j : space.Unflatten(flat)) {
      profile.push_back(SimplexPoint::Vertex(dimension, j));
    }
    out.push_back(std::move(profile));
  }
  return out;
}

SimplexPoint RandomSimplexPoint(int dimension, std::mt19937_64& rng,
                                int denominator) {
  std::vector<Rational> weights(dimension);
  bool nonzero = false;
  while (!nonzero) {
    for (Rational& w : weights) {
      w = static_cast<long>(rng() % static_cast<std::uint64_t>(denominator + 1));
      nonzero |= !w.IsZero();
    }
  }
  return NormalizeType(weights);
}

std::vector<TypeProfile> RandomTypeProfiles(int num_agents, int dimension,
                                            int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TypeProfile> out;
  for (int c = 0; c < count; ++c) {
    TypeProfile profile;
    for (int i = 0; i < num_agents; ++i) {
      profile.push_back(RandomSimplexPoint(dimension, rng));
    }
    out.push_back(std::move(profile));
  }
  return out;
}

}  // namespace typereg
