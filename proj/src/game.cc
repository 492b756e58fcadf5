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

#include "typereg/game.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "typereg/errors.h"

namespace typereg {
namespace {

std::vector<std::vector<std::string>> DefaultLabels(
    const std::vector<int>& counts) {
  std::vector<std::vector<std::string>> labels(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 1) {
      throw InputError("agent " + std::to_string(i) +
                       " must have at least one option");
    }
    for (int k = 0; k < counts[i]; ++k) labels[i].push_back(std::to_string(k));
  }
  return labels;
}

Rational Sum(const std::vector<Rational>& v) {
  Rational total;
  for (const Rational& x : v) total += x;
  return total;
}

}  // namespace

// ProfileSpace ---------------------------------------------------------------

ProfileSpace::ProfileSpace(std::vector<int> counts)
    : ProfileSpace(DefaultLabels(counts)) {}

ProfileSpace::ProfileSpace(std::vector<std::vector<std::string>> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("profile space needs at least one agent");
  num_profiles_ = 1;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw InputError("agent " + std::to_string(i) +
                       " must have at least one option");
    }
    std::vector<std::string> sorted = labels_[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("agent " + std::to_string(i) + " has duplicate labels");
    }
    num_profiles_ *= labels_[i].size();
  }
}

int ProfileSpace::Count(int agent) const {
  return static_cast<int>(Labels(agent).size());
}

const std::vector<std::string>& ProfileSpace::Labels(int agent) const {
  if (agent < 0 || agent >= NumAgents()) {
    throw InputError("agent index " + std::to_string(agent) + " out of range");
  }
  return labels_[agent];
}

const std::string& ProfileSpace::Label(int agent, int index) const {
  const auto& l = Labels(agent);
  if (index < 0 || index >= static_cast<int>(l.size())) {
    throw InputError("index " + std::to_string(index) + " out of range for agent " +
                     std::to_string(agent));
  }
  return l[index];
}

int ProfileSpace::IndexOf(int agent, const std::string& label) const {
  const auto& l = Labels(agent);
  auto it = std::find(l.begin(), l.end(), label);
  if (it == l.end()) {
    throw InputError("unknown label '" + label + "' for agent " +
                     std::to_string(agent));
  }
  return static_cast<int>(it - l.begin());
}

std::size_t ProfileSpace::Flatten(const Profile& profile) const {
  if (static_cast<int>(profile.size()) != NumAgents()) {
    throw InputError("profile has " + std::to_string(profile.size()) +
                     " entries, expected " + std::to_string(NumAgents()));
  }
  std::size_t flat = 0;
  for (int i = 0; i < NumAgents(); ++i) {
    const int count = static_cast<int>(labels_[i].size());
    if (profile[i] < 0 || profile[i] >= count) {
      throw InputError("index " + std::to_string(profile[i]) +
                       " out of range for agent " + std::to_string(i));
    }
    flat = flat * count + profile[i];
  }
  return flat;
}

Profile ProfileSpace::Unflatten(std::size_t flat) const {
  Profile profile(NumAgents());
  for (int i = NumAgents() - 1; i >= 0; --i) {
    const std::size_t count = labels_[i].size();
    profile[i] = static_cast<int>(flat % count);
    flat /= count;
  }
  return profile;
}

std::string ProfileSpace::ProfileLabel(const Profile& profile) const {
  std::string out = "(";
  for (int i = 0; i < NumAgents(); ++i) {
    if (i > 0) out += ",";
    out += Label(i, profile[i]);
  }
  return out + ")";
}

bool ProfileSpace::SameShape(const ProfileSpace& other) const {
  if (NumAgents() != other.NumAgents()) return false;
  for (int i = 0; i < NumAgents(); ++i) {
    if (Count(i) != other.Count(i)) return false;
  }
  return true;
}

// MixedStrategy --------------------------------------------------------------

MixedStrategy::MixedStrategy(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw InputError("mixed strategy over zero actions");
  for (const Rational& p : probs_) {
    if (p.Sign() < 0) throw InputError("mixed strategy with negative mass");
  }
  if (Sum(probs_) != 1) {
    throw InputError("mixed strategy masses sum to " + Sum(probs_).ToString());
  }
}

MixedStrategy MixedStrategy::Pure(int num_actions, int action) {
  if (action < 0 || action >= num_actions) {
    throw InputError("pure action " + std::to_string(action) + " out of range");
  }
  std::vector<Rational> probs(num_actions);
  probs[action] = 1;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  return MixedStrategy(
      std::vector<Rational>(num_actions, Rational(1, num_actions)));
}

std::vector<int> MixedStrategy::Support() const {
  std::vector<int> support;
  for (int a = 0; a < Size(); ++a) {
    if (!probs_[a].IsZero()) support.push_back(a);
  }
  return support;
}

std::string MixedStrategy::ToString() const {
  std::string out = "(";
  for (int a = 0; a < Size(); ++a) {
    if (a > 0) out += ",";
    out += probs_[a].ToString();
  }
  return out + ")";
}

MixedProfile PureProfile(const ActionSpace& actions, const Profile& profile) {
  actions.Flatten(profile);
  MixedProfile out;
  for (int i = 0; i < actions.NumAgents(); ++i) {
    out.push_back(MixedStrategy::Pure(actions.Count(i), profile[i]));
  }
  return out;
}

// SimplexPoint ---------------------------------------------------------------

SimplexPoint::SimplexPoint(std::vector<Rational> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("simplex point of dimension zero");
  for (const Rational& c : coords_) {
    if (c.Sign() < 0) throw InputError("simplex point with negative coordinate");
  }
  if (Sum(coords_) != 1) {
    throw InputError("simplex point coordinates sum to " +
                     Sum(coords_).ToString());
  }
}

SimplexPoint SimplexPoint::Vertex(int dimension, int j) {
  if (j < 0 || j >= dimension) throw InputError("vertex index out of range");
  std::vector<Rational> coords(dimension);
  coords[j] = 1;
  return SimplexPoint(std::move(coords));
}

SimplexPoint SimplexPoint::FromScalar(const Rational& t) {
  if (t.Sign() < 0 || t > 1) {
    throw InputError("double-game type " + t.ToString() + " outside [0,1]");
  }
  return SimplexPoint({1 - t, t});
}

std::optional<int> SimplexPoint::VertexIndex() const {
  for (int j = 0; j < Dimension(); ++j) {
    if (coords_[j] == 1) return j;
  }
  return std::nullopt;
}

std::string SimplexPoint::ToString() const {
  std::string out = "(";
  for (int j = 0; j < Dimension(); ++j) {
    if (j > 0) out += ",";
    out += coords_[j].ToString();
  }
  return out + ")";
}

TypeSpace TypeSpace::Finite(std::vector<SimplexPoint> pts,
                            std::vector<std::vector<Rational>> raw_vectors) {
  if (pts.empty()) throw InputError("finite type space with no types");
  if (!raw_vectors.empty() && raw_vectors.size() != pts.size()) {
    throw InputError("raw type vectors do not match normalized types");
  }
  TypeSpace space;
  space.full_simplex = false;
  space.points = std::move(pts);
  space.raw = std::move(raw_vectors);
  return space;
}

bool TypeSpace::Contains(const SimplexPoint& p) const {
  if (full_simplex) return true;
  return std::find(points.begin(), points.end(), p) != points.end();
}

// NormalFormGame -------------------------------------------------------------

NormalFormGame::NormalFormGame(ActionSpace actions,
                               std::vector<std::vector<Rational>> payoffs)
    : actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  if (static_cast<int>(payoffs_.size()) != actions_.NumAgents()) {
    throw InputError("payoff tensor has " + std::to_string(payoffs_.size()) +
                     " agents, action space has " +
                     std::to_string(actions_.NumAgents()));
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (payoffs_[i].size() != actions_.NumProfiles()) {
      throw InputError("payoff table of agent " + std::to_string(i) +
                       " has " + std::to_string(payoffs_[i].size()) +
                       " cells, expected " +
                       std::to_string(actions_.NumProfiles()));
    }
  }
}

NormalFormGame NormalFormGame::FromFunction(
    ActionSpace actions,
    const std::function<Rational(int, const Profile&)>& payoff) {
  std::vector<std::vector<Rational>> table(actions.NumAgents());
  for (std::size_t flat = 0; flat < actions.NumProfiles(); ++flat) {
    const Profile profile = actions.Unflatten(flat);
    for (int i = 0; i < actions.NumAgents(); ++i) {
      table[i].push_back(payoff(i, profile));
    }
  }
  return NormalFormGame(std::move(actions), std::move(table));
}

NormalFormGame NormalFormGame::Bimatrix(
    const std::vector<std::vector<std::pair<Rational, Rational>>>& cells,
    std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
  if (cells.empty() || cells.front().empty()) {
    throw InputError("bimatrix needs at least one row and column");
  }
  const int rows = static_cast<int>(cells.size());
  const int cols = static_cast<int>(cells.front().size());
  for (const auto& row : cells) {
    if (static_cast<int>(row.size()) != cols) {
      throw InputError("ragged bimatrix");
    }
  }
  ActionSpace space = row_labels.empty() && col_labels.empty()
                          ? ActionSpace(std::vector<int>{rows, cols})
                          : ActionSpace(std::vector<std::vector<std::string>>{
                                std::move(row_labels), std::move(col_labels)});
  if (space.Count(0) != rows || space.Count(1) != cols) {
    throw InputError("bimatrix labels do not match its shape");
  }
  return FromFunction(std::move(space), [&](int agent, const Profile& p) {
    const auto& cell = cells[p[0]][p[1]];
    return agent == 0 ? cell.first : cell.second;
  });
}

const Rational& NormalFormGame::Payoff(int agent, const Profile& profile) const {
  if (agent < 0 || agent >= NumAgents()) {
    throw InputError("agent index " + std::to_string(agent) + " out of range");
  }
  return payoffs_[agent][actions_.Flatten(profile)];
}

std::vector<Rational> NormalFormGame::PurePayoff(const Profile& profile) const {
  const std::size_t flat = actions_.Flatten(profile);
  std::vector<Rational> out;
  for (int i = 0; i < NumAgents(); ++i) out.push_back(payoffs_[i][flat]);
  return out;
}

void NormalFormGame::CheckProfileShape(
    std::span<const MixedStrategy> profile) const {
  if (static_cast<int>(profile.size()) != NumAgents()) {
    throw InputError("mixed profile has " + std::to_string(profile.size()) +
                     " strategies, expected " + std::to_string(NumAgents()));
  }
  for (int i = 0; i < NumAgents(); ++i) {
    if (profile[i].Size() != actions_.Count(i)) {
      throw InputError("mixed strategy of agent " + std::to_string(i) +
                       " has " + std::to_string(profile[i].Size()) +
                       " entries, expected " + std::to_string(actions_.Count(i)));
    }
  }
}

std::vector<Rational> NormalFormGame::MixedPayoff(
    std::span<const MixedStrategy> profile) const {
  CheckProfileShape(profile);
  std::vector<Rational> out(NumAgents());
  for (std::size_t flat = 0; flat < actions_.NumProfiles(); ++flat) {
    const Profile p = actions_.Unflatten(flat);
    Rational weight = 1;
    for (int i = 0; i < NumAgents() && !weight.IsZero(); ++i) {
      weight *= profile[i][p[i]];
    }
    if (weight.IsZero()) continue;
    for (int i = 0; i < NumAgents(); ++i) out[i] += weight * payoffs_[i][flat];
  }
  return out;
}

std::vector<Rational> NormalFormGame::DeviationPayoffs(
    int agent, std::span<const MixedStrategy> profile) const {
  CheckProfileShape(profile);
  std::vector<Rational> out(actions_.Count(agent));
  for (std::size_t flat = 0; flat < actions_.NumProfiles(); ++flat) {
    const Profile p = actions_.Unflatten(flat);
    Rational weight = 1;
    for (int k = 0; k < NumAgents() && !weight.IsZero(); ++k) {
      if (k != agent) weight *= profile[k][p[k]];
    }
    if (!weight.IsZero()) out[p[agent]] += weight * payoffs_[agent][flat];
  }
  return out;
}

NormalFormGame NormalFormGame::ScaledForAgent(int agent,
                                              const Rational& factor) const {
  NormalFormGame copy = *this;
  for (Rational& x : copy.payoffs_.at(agent)) x *= factor;
  return copy;
}

// MultiGame ------------------------------------------------------------------

namespace {

void CheckTypeProfile(const TypeProfile& types, int num_agents, int dimension) {
  if (static_cast<int>(types.size()) != num_agents) {
    throw InputError("type profile has " + std::to_string(types.size()) +
                     " entries, expected " + std::to_string(num_agents));
  }
  for (const SimplexPoint& t : types) {
    if (t.Dimension() != dimension) {
      throw InputError("type " + t.ToString() + " has dimension " +
                       std::to_string(t.Dimension()) + ", expected " +
                       std::to_string(dimension));
    }
  }
}

void CheckTypeSpaces(std::vector<TypeSpace>& types, int num_agents,
                     int dimension) {
  if (types.empty()) types.assign(num_agents, TypeSpace::FullSimplex());
  if (static_cast<int>(types.size()) != num_agents) {
    throw InputError("expected one type space per agent");
  }
  for (const TypeSpace& space : types) {
    for (const SimplexPoint& p : space.points) {
      if (p.Dimension() != dimension) {
        throw InputError("type point " + p.ToString() + " has wrong dimension");
      }
    }
  }
}

}  // namespace

MultiGame::MultiGame(std::vector<NormalFormGame> basic,
                     std::vector<TypeSpace> types)
    : basic_(std::move(basic)), types_(std::move(types)) {
  if (basic_.empty()) throw InputError("multi-game needs at least one basic game");
  for (const NormalFormGame& g : basic_) {
    if (!g.Actions().SameShape(basic_.front().Actions())) {
      throw InputError("basic games of a multi-game must share one action space");
    }
  }
  CheckTypeSpaces(types_, NumAgents(), Dimension());
}

void MultiGame::CheckTypes(const TypeProfile& types) const {
  CheckTypeProfile(types, NumAgents(), Dimension());
}

NormalFormGame MultiGame::LocalGame(const TypeProfile& types) const {
  CheckTypes(types);
  std::vector<std::vector<Rational>> table(
      NumAgents(), std::vector<Rational>(Actions().NumProfiles()));
  for (int i = 0; i < NumAgents(); ++i) {
    for (int j = 0; j < Dimension(); ++j) {
      const Rational& w = types[i][j];
      if (w.IsZero()) continue;
      const auto& src = basic_[j].PayoffTable(i);
      for (std::size_t flat = 0; flat < src.size(); ++flat) {
        table[i][flat] += src[flat] * w;
      }
    }
  }
  return NormalFormGame(Actions(), std::move(table));
}

Rational MultiGame::Utility(int agent, const Profile& actions,
                            const TypeProfile& types) const {
  CheckTypes(types);
  Rational total;
  for (int j = 0; j < Dimension(); ++j) {
    total += basic_[j].Payoff(agent, actions) * types[agent][j];
  }
  return total;
}

MultiGame MultiGame::ScaledForAgent(int agent, const Rational& factor) const {
  MultiGame copy = *this;
  for (NormalFormGame& g : copy.basic_) g = g.ScaledForAgent(agent, factor);
  return copy;
}

// GeneralizedMultiGame -------------------------------------------------------

GeneralizedMultiGame::GeneralizedMultiGame(
    std::vector<std::vector<NormalFormGame>> basic, std::vector<TypeSpace> types)
    : basic_(std::move(basic)), types_(std::move(types)) {
  if (basic_.empty() || basic_.front().empty()) {
    throw InputError("generalized multi-game needs n x m basic games");
  }
  const std::size_t m = basic_.front().size();
  for (const auto& row : basic_) {
    if (row.size() != m) throw InputError("generalized multi-game is ragged");
    for (const NormalFormGame& g : row) {
      if (!g.Actions().SameShape(Actions())) {
        throw InputError("basic games must share one action space");
      }
    }
  }
  if (Actions().NumAgents() != NumAgents()) {
    throw InputError("generalized multi-game needs one row of basic games per agent");
  }
  CheckTypeSpaces(types_, NumAgents(), Dimension());
}

void GeneralizedMultiGame::CheckTypes(const TypeProfile& types) const {
  CheckTypeProfile(types, NumAgents(), Dimension());
}

NormalFormGame GeneralizedMultiGame::LocalGame(const TypeProfile& types) const {
  CheckTypes(types);
  std::vector<std::vector<Rational>> table(
      NumAgents(), std::vector<Rational>(Actions().NumProfiles()));
  for (int k = 0; k < NumAgents(); ++k) {
    for (int j = 0; j < Dimension(); ++j) {
      const Rational& w = types[k][j];
      if (w.IsZero()) continue;
      for (int i = 0; i < NumAgents(); ++i) {
        const auto& src = basic_[k][j].PayoffTable(i);
        for (std::size_t flat = 0; flat < src.size(); ++flat) {
          table[i][flat] += src[flat] * w;
        }
      }
    }
  }
  return NormalFormGame(Actions(), std::move(table));
}

Rational GeneralizedMultiGame::Utility(int agent, const Profile& actions,
                                       const TypeProfile& types) const {
  CheckTypes(types);
  Rational total;
  for (int k = 0; k < NumAgents(); ++k) {
    for (int j = 0; j < Dimension(); ++j) {
      total += basic_[k][j].Payoff(agent, actions) * types[k][j];
    }
  }
  return total;
}

// Prior ----------------------------------------------------------------------

Prior::Prior(ProfileSpace types, std::vector<Rational> joint)
    : types_(std::move(types)), joint_(std::move(joint)) {
  if (joint_.size() != types_.NumProfiles()) {
    throw InputError("prior has " + std::to_string(joint_.size()) +
                     " masses, expected " + std::to_string(types_.NumProfiles()));
  }
  for (const Rational& p : joint_) {
    if (p.Sign() < 0) throw InputError("prior with negative mass");
  }
  if (Sum(joint_) != 1) {
    throw InputError("prior masses sum to " + Sum(joint_).ToString());
  }
}

Prior Prior::Uniform(const ProfileSpace& types) {
  const long n = static_cast<long>(types.NumProfiles());
  return Prior(types, std::vector<Rational>(n, Rational(1, n)));
}

Prior Prior::PointMass(const ProfileSpace& types, const Profile& at) {
  std::vector<Rational> joint(types.NumProfiles());
  joint[types.Flatten(at)] = 1;
  return Prior(types, std::move(joint));
}

const Rational& Prior::Mass(const Profile& types) const {
  return joint_[types_.Flatten(types)];
}

Rational Prior::Marginal(int agent, int type) const {
  types_.Label(agent, type);
  Rational total;
  for (std::size_t flat = 0; flat < joint_.size(); ++flat) {
    if (types_.Unflatten(flat)[agent] == type) total += joint_[flat];
  }
  return total;
}

// FiniteBayesianGame ---------------------------------------------------------

FiniteBayesianGame::FiniteBayesianGame(ProfileSpace types,
                                       std::vector<NormalFormGame> local_games)
    : types_(std::move(types)), local_games_(std::move(local_games)) {
  if (local_games_.size() != types_.NumProfiles()) {
    throw InputError("Bayesian game has " + std::to_string(local_games_.size()) +
                     " local games, expected one per type profile (" +
                     std::to_string(types_.NumProfiles()) + ")");
  }
  for (const NormalFormGame& g : local_games_) {
    if (!g.Actions().SameShape(local_games_.front().Actions())) {
      throw InputError("local games must share one action space");
    }
  }
  if (Actions().NumAgents() != types_.NumAgents()) {
    throw InputError("type space and action space disagree on agent count");
  }
}

const NormalFormGame& FiniteBayesianGame::LocalGame(const Profile& types) const {
  return local_games_[types_.Flatten(types)];
}

Rational FiniteBayesianGame::Utility(int agent, const Profile& actions,
                                     const Profile& types) const {
  return LocalGame(types).Payoff(agent, actions);
}

void ValidateStrategyMap(const FiniteBayesianGame& game,
                         const StrategyMapProfile& strategy) {
  if (static_cast<int>(strategy.size()) != game.NumAgents()) {
    throw InputError("strategy map profile has " +
                     std::to_string(strategy.size()) + " agents, expected " +
                     std::to_string(game.NumAgents()));
  }
  for (int i = 0; i < game.NumAgents(); ++i) {
    if (static_cast<int>(strategy[i].size()) != game.Types().Count(i)) {
      throw InputError("strategy map of agent " + std::to_string(i) +
                       " covers " + std::to_string(strategy[i].size()) +
                       " types, expected " + std::to_string(game.Types().Count(i)));
    }
    for (int t = 0; t < game.Types().Count(i); ++t) {
      if (strategy[i][t].Size() != game.Actions().Count(i)) {
        throw InputError("strategy of agent " + std::to_string(i) + " at type '" +
                         game.Types().Label(i, t) + "' has wrong action count");
      }
    }
  }
}

std::vector<Rational> BayesianDeviationUtilities(
    const FiniteBayesianGame& game, const StrategyMapProfile& strategy,
    const Prior& prior, int agent, int type) {
  ValidateStrategyMap(game, strategy);
  if (!prior.Types().SameShape(game.Types())) {
    throw InputError("prior is defined on a different type space");
  }
  const Rational marginal = prior.Marginal(agent, type);
  if (marginal.IsZero()) {
    throw InputError("conditional undefined: agent " + std::to_string(agent) +
                     " type '" + game.Types().Label(agent, type) +
                     "' has zero marginal mass");
  }
  std::vector<Rational> out(game.Actions().Count(agent));
  MixedProfile profile(game.NumAgents());
  for (std::size_t flat = 0; flat < game.Types().NumProfiles(); ++flat) {
    const Profile types = game.Types().Unflatten(flat);
    if (types[agent] != type || prior.Mass(flat).IsZero()) continue;
    const Rational conditional = prior.Mass(flat) / marginal;
    for (int k = 0; k < game.NumAgents(); ++k) profile[k] = strategy[k][types[k]];
    const std::vector<Rational> dev =
        game.LocalGame(flat).DeviationPayoffs(agent, profile);
    for (std::size_t a = 0; a < dev.size(); ++a) out[a] += conditional * dev[a];
  }
  return out;
}

Rational BayesianExpectedUtility(const FiniteBayesianGame& game,
                                 const StrategyMapProfile& strategy,
                                 const Prior& prior, int agent, int type,
                                 const MixedStrategy& own) {
  const std::vector<Rational> dev =
      BayesianDeviationUtilities(game, strategy, prior, agent, type);
  if (own.Size() != static_cast<int>(dev.size())) {
    throw InputError("own strategy has wrong action count");
  }
  Rational total;
  for (std::size_t a = 0; a < dev.size(); ++a) total += own[a] * dev[a];
  return total;
}

Rational BayesianExpectedUtility(const FiniteBayesianGame& game,
                                 const StrategyMapProfile& strategy,
                                 const Prior& prior, int agent, int type) {
  ValidateStrategyMap(game, strategy);
  return BayesianExpectedUtility(game, strategy, prior, agent, type,
                                 strategy[agent][type]);
}

bool IsBayesNash(const FiniteBayesianGame& game,
                 const StrategyMapProfile& strategy, const Prior& prior) {
  ValidateStrategyMap(game, strategy);
  for (int i = 0; i < game.NumAgents(); ++i) {
    for (int t = 0; t < game.Types().Count(i); ++t) {
      if (prior.Marginal(i, t).IsZero()) continue;
      const std::vector<Rational> dev =
          BayesianDeviationUtilities(game, strategy, prior, i, t);
      Rational value;
      for (std::size_t a = 0; a < dev.size(); ++a) {
        value += strategy[i][t][static_cast<int>(a)] * dev[a];
      }
      if (*std::max_element(dev.begin(), dev.end()) > value) return false;
    }
  }
  return true;
}

}  // namespace typereg
