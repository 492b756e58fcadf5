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

// Exact data model for finite games: normal-form games, multi-games, their
// generalized (cross-agent) variant and finite Bayesian games with priors.

#ifndef TYPEREG_GAME_H_
#define TYPEREG_GAME_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "typereg/rational.h"

namespace typereg {

// One index per agent.
using Profile = std::vector<int>;

// Mixed-radix product space: agent i has labels[i].size() options. Used for
// joint pure action profiles and for joint type profiles of finite games.
// Profiles flatten row-major, agent 0 most significant.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  // Labels default to "0", "1", ...; every agent needs at least one option.
  explicit ProfileSpace(std::vector<int> counts);
  explicit ProfileSpace(std::vector<std::vector<std::string>> labels);

  int NumAgents() const { return static_cast<int>(labels_.size()); }
  int Count(int agent) const;
  std::size_t NumProfiles() const { return num_profiles_; }
  const std::vector<std::string>& Labels(int agent) const;
  const std::string& Label(int agent, int index) const;
  // Throws InputError for unknown labels.
  int IndexOf(int agent, const std::string& label) const;

  // Throws InputError if the profile has the wrong length or an entry is
  // out of range.
  std::size_t Flatten(const Profile& profile) const;
  Profile Unflatten(std::size_t flat) const;
  std::string ProfileLabel(const Profile& profile) const;

  bool SameShape(const ProfileSpace& other) const;
  friend bool operator==(const ProfileSpace&, const ProfileSpace&) = default;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::size_t num_profiles_ = 0;
};

using ActionSpace = ProfileSpace;

// Probability vector over one agent's pure actions.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws InputError unless entries are nonnegative and sum to exactly one.
  explicit MixedStrategy(std::vector<Rational> probs);

  static MixedStrategy Pure(int num_actions, int action);
  static MixedStrategy Uniform(int num_actions);

  int Size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int a) const { return probs_[a]; }
  const std::vector<Rational>& Probs() const { return probs_; }
  std::vector<int> Support() const;
  bool IsPure() const { return Support().size() == 1; }
  std::string ToString() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
  friend auto operator<=>(const MixedStrategy& a, const MixedStrategy& b) {
    return a.probs_ <=> b.probs_;
  }

 private:
  std::vector<Rational> probs_;
};

using MixedProfile = std::vector<MixedStrategy>;

MixedProfile PureProfile(const ActionSpace& actions, const Profile& profile);

// Point of the (m-1)-simplex: nonnegative coordinates summing to one.
class SimplexPoint {
 public:
  SimplexPoint() = default;
  // Throws InputError unless coordinates are nonnegative and sum to one.
  explicit SimplexPoint(std::vector<Rational> coords);

  // Unit coordinate point e_j (0-based j).
  static SimplexPoint Vertex(int dimension, int j);
  // Double-game convenience: the scalar type t stands for (1-t, t).
  static SimplexPoint FromScalar(const Rational& t);

  int Dimension() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int j) const { return coords_[j]; }
  const std::vector<Rational>& Coords() const { return coords_; }
  // Index j if this is the vertex e_j.
  std::optional<int> VertexIndex() const;
  std::string ToString() const;

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;
  friend auto operator<=>(const SimplexPoint& a, const SimplexPoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

using TypeProfile = std::vector<SimplexPoint>;

// An agent's type set inside the simplex: either the whole simplex or a
// finite list of points. Raw (pre-normalization) vectors are kept when the
// points were produced by normalizing.
struct TypeSpace {
  bool full_simplex = true;
  std::vector<SimplexPoint> points;
  std::vector<std::vector<Rational>> raw;

  static TypeSpace FullSimplex() { return {}; }
  static TypeSpace Finite(std::vector<SimplexPoint> pts,
                          std::vector<std::vector<Rational>> raw_vectors = {});
  bool Contains(const SimplexPoint& p) const;

  friend bool operator==(const TypeSpace&, const TypeSpace&) = default;
};

// Complete payoff tensor for an n-agent finite game.
class NormalFormGame {
 public:
  NormalFormGame() = default;
  // payoffs[agent][flat profile]; throws InputError if any cell is missing.
  NormalFormGame(ActionSpace actions, std::vector<std::vector<Rational>> payoffs);

  static NormalFormGame FromFunction(
      ActionSpace actions,
      const std::function<Rational(int agent, const Profile&)>& payoff);

  // Two-agent convenience: rows[a][b] = {u_1, u_2}.
  static NormalFormGame Bimatrix(
      const std::vector<std::vector<std::pair<Rational, Rational>>>& cells,
      std::vector<std::string> row_labels = {},
      std::vector<std::string> col_labels = {});

  int NumAgents() const { return actions_.NumAgents(); }
  const ActionSpace& Actions() const { return actions_; }
  const Rational& Payoff(int agent, std::size_t flat) const {
    return payoffs_[agent][flat];
  }
  const Rational& Payoff(int agent, const Profile& profile) const;
  const std::vector<Rational>& PayoffTable(int agent) const {
    return payoffs_[agent];
  }

  std::vector<Rational> PurePayoff(const Profile& profile) const;
  // Exact multilinear expectation. Throws InputError on dimension mismatch.
  std::vector<Rational> MixedPayoff(std::span<const MixedStrategy> profile) const;
  // Expected payoff of each pure action of 'agent' against the others'
  // mixtures in 'profile' (the agent's own entry is ignored).
  std::vector<Rational> DeviationPayoffs(
      int agent, std::span<const MixedStrategy> profile) const;

  // Copy with every payoff of 'agent' multiplied by 'factor'.
  NormalFormGame ScaledForAgent(int agent, const Rational& factor) const;

  friend bool operator==(const NormalFormGame&, const NormalFormGame&) = default;

 private:
  void CheckProfileShape(std::span<const MixedStrategy> profile) const;

  ActionSpace actions_;
  std::vector<std::vector<Rational>> payoffs_;
};

// Agent i's utility at (a, theta) is sum_j basic[j].payoff(i, a) * theta_ij.
class MultiGame {
 public:
  MultiGame() = default;
  // All basic games must share one action space. Empty 'types' means the
  // full simplex for every agent.
  MultiGame(std::vector<NormalFormGame> basic, std::vector<TypeSpace> types = {});

  int NumAgents() const { return basic_.front().NumAgents(); }
  int Dimension() const { return static_cast<int>(basic_.size()); }
  const ActionSpace& Actions() const { return basic_.front().Actions(); }
  const NormalFormGame& Basic(int j) const { return basic_[j]; }
  const std::vector<NormalFormGame>& BasicGames() const { return basic_; }
  const TypeSpace& Types(int agent) const { return types_[agent]; }

  // Throws InputError unless every entry is a point of the right dimension.
  NormalFormGame LocalGame(const TypeProfile& types) const;
  Rational Utility(int agent, const Profile& actions,
                   const TypeProfile& types) const;

  MultiGame ScaledForAgent(int agent, const Rational& factor) const;

  friend bool operator==(const MultiGame&, const MultiGame&) = default;

 private:
  void CheckTypes(const TypeProfile& types) const;

  std::vector<NormalFormGame> basic_;
  std::vector<TypeSpace> types_;
};

// Agent i's utility is sum_{k,j} basic[k][j].payoff(i, a) * theta_kj.
class GeneralizedMultiGame {
 public:
  GeneralizedMultiGame() = default;
  // basic[k][j]; n x m games sharing one action space with n agents.
  GeneralizedMultiGame(std::vector<std::vector<NormalFormGame>> basic,
                       std::vector<TypeSpace> types = {});

  int NumAgents() const { return static_cast<int>(basic_.size()); }
  int Dimension() const { return static_cast<int>(basic_.front().size()); }
  const ActionSpace& Actions() const { return basic_[0][0].Actions(); }
  const NormalFormGame& Basic(int k, int j) const { return basic_[k][j]; }
  const TypeSpace& Types(int agent) const { return types_[agent]; }

  NormalFormGame LocalGame(const TypeProfile& types) const;
  Rational Utility(int agent, const Profile& actions,
                   const TypeProfile& types) const;

  // Mutable access for fault-injection style tests and file loading.
  NormalFormGame& MutableBasic(int k, int j) { return basic_[k][j]; }

 private:
  void CheckTypes(const TypeProfile& types) const;

  std::vector<std::vector<NormalFormGame>> basic_;
  std::vector<TypeSpace> types_;
};

// Joint distribution over the joint type profiles of a finite Bayesian game.
class Prior {
 public:
  Prior() = default;
  // Throws InputError unless masses are nonnegative and sum to one.
  Prior(ProfileSpace types, std::vector<Rational> joint);

  static Prior Uniform(const ProfileSpace& types);
  static Prior PointMass(const ProfileSpace& types, const Profile& at);

  const ProfileSpace& Types() const { return types_; }
  const Rational& Mass(std::size_t flat) const { return joint_[flat]; }
  const Rational& Mass(const Profile& types) const;
  const std::vector<Rational>& Joint() const { return joint_; }
  Rational Marginal(int agent, int type) const;

 private:
  ProfileSpace types_;
  std::vector<Rational> joint_;
};

// Finite Bayesian game stored as one local game per joint type profile.
class FiniteBayesianGame {
 public:
  FiniteBayesianGame() = default;
  // local_games[flat type profile]; all must share one action space.
  FiniteBayesianGame(ProfileSpace types, std::vector<NormalFormGame> local_games);

  int NumAgents() const { return types_.NumAgents(); }
  const ActionSpace& Actions() const { return local_games_.front().Actions(); }
  const ProfileSpace& Types() const { return types_; }
  const NormalFormGame& LocalGame(const Profile& types) const;
  const NormalFormGame& LocalGame(std::size_t flat) const {
    return local_games_[flat];
  }
  Rational Utility(int agent, const Profile& actions, const Profile& types) const;

 private:
  ProfileSpace types_;
  std::vector<NormalFormGame> local_games_;
};

// strategy[agent][type index].
using StrategyMap = std::vector<MixedStrategy>;
using StrategyMapProfile = std::vector<StrategyMap>;

// Throws InputError if the map is not defined (with the right action count)
// on every type of every agent.
void ValidateStrategyMap(const FiniteBayesianGame& game,
                         const StrategyMapProfile& strategy);

// Conditional expected utility of 'agent' at its own type 'type' when it
// plays 'own' and everybody else follows 'strategy'. Throws InputError
// ("conditional undefined") if the type has zero marginal mass.
Rational BayesianExpectedUtility(const FiniteBayesianGame& game,
                                 const StrategyMapProfile& strategy,
                                 const Prior& prior, int agent, int type,
                                 const MixedStrategy& own);
// Same with own = strategy[agent][type].
Rational BayesianExpectedUtility(const FiniteBayesianGame& game,
                                 const StrategyMapProfile& strategy,
                                 const Prior& prior, int agent, int type);
// One value per pure action of 'agent'.
std::vector<Rational> BayesianDeviationUtilities(
    const FiniteBayesianGame& game, const StrategyMapProfile& strategy,
    const Prior& prior, int agent, int type);

// No agent gains at any positive-marginal type by a pure deviation. Types
// with zero marginal are skipped.
bool IsBayesNash(const FiniteBayesianGame& game,
                 const StrategyMapProfile& strategy, const Prior& prior);

}  // namespace typereg

#endif  // TYPEREG_GAME_H_
