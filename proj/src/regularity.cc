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

#include "typereg/regularity.h"

#include <algorithm>
#include <set>
#include <utility>

#include "typereg/errors.h"
#include "typereg/ne_solver.h"

namespace typereg {

Witness::Witness(std::vector<std::vector<MixedStrategy>> values)
    : values_(std::move(values)) {
  if (values_.empty() || values_.front().empty()) {
    throw InputError("witness needs at least one agent and one vertex");
  }
  for (const auto& row : values_) {
    if (row.size() != values_.front().size()) {
      throw InputError("witness must cover the same vertices for every agent");
    }
  }
}

MixedProfile Witness::Extend(const TypeProfile& types) const {
  if (static_cast<int>(types.size()) != NumAgents()) {
    throw InputError("type profile does not match witness agent count");
  }
  MixedProfile out;
  for (int i = 0; i < NumAgents(); ++i) {
    out.push_back(ExtendWitness(*this, i, types[i]));
  }
  return out;
}

MixedStrategy ExtendWitness(const Witness& witness, int agent,
                            const SimplexPoint& type) {
  if (type.Dimension() != witness.Dimension()) {
    throw InputError("type dimension does not match witness");
  }
  const int actions = witness.At(agent, 0).Size();
  std::vector<Rational> probs(actions);
  for (int j = 0; j < type.Dimension(); ++j) {
    if (type[j].IsZero()) continue;
    const MixedStrategy& s = witness.At(agent, j);
    if (s.Size() != actions) throw InputError("witness has ragged action counts");
    for (int a = 0; a < actions; ++a) probs[a] += type[j] * s[a];
  }
  return MixedStrategy(std::move(probs));
}

std::string ToString(RegularityStatus status) {
  switch (status) {
    case RegularityStatus::kCertified:
      return "certified";
    case RegularityStatus::kRefuted:
      return "refuted";
    case RegularityStatus::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

TypeProfile VertexProfile(const Profile& vertices, int dimension) {
  TypeProfile out;
  for (int j : vertices) out.push_back(SimplexPoint::Vertex(dimension, j));
  return out;
}

class WitnessSearch {
 public:
  explicit WitnessSearch(const MultiGame& game)
      : game_(game),
        n_(game.NumAgents()),
        m_(game.Dimension()),
        vertices_(std::vector<int>(n_, m_)) {
    for (std::size_t flat = 0; flat < vertices_.NumProfiles(); ++flat) {
      vertex_games_.push_back(
          game_.LocalGame(VertexProfile(vertices_.Unflatten(flat), m_)));
    }
    BuildCandidates();
    // A vertex profile is checked as soon as its last variable is assigned.
    checks_at_.resize(n_ * m_);
    for (std::size_t flat = 0; flat < vertices_.NumProfiles(); ++flat) {
      const Profile v = vertices_.Unflatten(flat);
      int last = 0;
      for (int i = 0; i < n_; ++i) last = std::max(last, Var(i, v[i]));
      checks_at_[last].push_back(flat);
    }
    assignment_.assign(n_ * m_, -1);
  }

  RegularityReport Run() {
    RegularityReport report;
    report.profiles_checked = vertices_.NumProfiles();
    if (Assign(0)) {
      report.status = RegularityStatus::kCertified;
      report.witness = MakeWitness(assignment_);
      return report;
    }
    report.status = complete_ ? RegularityStatus::kRefuted
                              : RegularityStatus::kInconclusive;
    report.note = complete_
                      ? "no witness exists: candidate set is complete"
                      : "no witness among the searched candidates; mixed "
                        "witnesses outside the candidate set are not excluded";
    std::vector<int> closest = deepest_;
    for (int& c : closest) c = std::max(c, 0);
    const Witness w = MakeWitness(closest);
    for (std::size_t flat = 0; flat < vertices_.NumProfiles(); ++flat) {
      const TypeProfile types = VertexProfile(vertices_.Unflatten(flat), m_);
      const MixedProfile profile = w.Extend(types);
      if (auto dev = FindProfitableDeviation(vertex_games_[flat], profile)) {
        report.violations.push_back({types, dev->agent, dev->action, dev->gain});
      }
    }
    report.witness = w;
    return report;
  }

 private:
  int Var(int agent, int vertex) const { return agent * m_ + vertex; }

  void BuildCandidates() {
    candidates_.assign(n_ * m_, {});
    std::vector<std::set<MixedStrategy>> mixed(n_ * m_);
    complete_ = (n_ == 2);
    if (n_ == 2) {
      for (std::size_t flat = 0; flat < vertices_.NumProfiles(); ++flat) {
        const Profile v = vertices_.Unflatten(flat);
        const NEResult ne = SupportEnumeration(vertex_games_[flat]);
        if (ne.degenerate) complete_ = false;
        for (const Equilibrium& eq : ne.equilibria) {
          for (int i = 0; i < n_; ++i) {
            if (!eq.pure) mixed[Var(i, v[i])].insert(eq.profile[i]);
          }
        }
      }
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < m_; ++j) {
        auto& list = candidates_[Var(i, j)];
        for (int a = 0; a < game_.Actions().Count(i); ++a) {
          list.push_back(MixedStrategy::Pure(game_.Actions().Count(i), a));
        }
        for (const MixedStrategy& s : mixed[Var(i, j)]) {
          if (!s.IsPure()) list.push_back(s);
        }
      }
    }
  }

  Witness MakeWitness(const std::vector<int>& choice) const {
    std::vector<std::vector<MixedStrategy>> values(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < m_; ++j) {
        values[i].push_back(candidates_[Var(i, j)][choice[Var(i, j)]]);
      }
    }
    return Witness(std::move(values));
  }

  bool Consistent(int var) const {
    for (std::size_t flat : checks_at_[var]) {
      const Profile v = vertices_.Unflatten(flat);
      MixedProfile profile;
      for (int i = 0; i < n_; ++i) {
        profile.push_back(candidates_[Var(i, v[i])][assignment_[Var(i, v[i])]]);
      }
      if (!IsNash(vertex_games_[flat], profile)) return false;
    }
    return true;
  }

  bool Assign(int var) {
    if (var == n_ * m_) return true;
    for (int c = 0; c < static_cast<int>(candidates_[var].size()); ++c) {
      assignment_[var] = c;
      if (var >= deepest_depth_) {
        deepest_depth_ = var + 1;
        deepest_ = assignment_;
      }
      if (Consistent(var) && Assign(var + 1)) return true;
    }
    assignment_[var] = -1;
    return false;
  }

  const MultiGame& game_;
  int n_;
  int m_;
  ProfileSpace vertices_;
  std::vector<NormalFormGame> vertex_games_;
  std::vector<std::vector<MixedStrategy>> candidates_;
  std::vector<std::vector<std::size_t>> checks_at_;
  std::vector<int> assignment_;
  std::vector<int> deepest_;
  int deepest_depth_ = 0;
  bool complete_ = false;
};

}  // namespace

RegularityReport SearchVertexWitness(const MultiGame& game) {
  return WitnessSearch(game).Run();
}

std::vector<SimplexPoint> SimplexGrid(int dimension, int resolution) {
  if (dimension < 1) throw InputError("simplex dimension must be at least 1");
  if (resolution < 1) throw InputError("grid resolution must be at least 1");
  std::vector<SimplexPoint> out;
  std::vector<int> k(dimension, 0);
  // Enumerate compositions of 'resolution' into 'dimension' parts.
  auto emit = [&] {
    std::vector<Rational> coords;
    for (int x : k) coords.push_back(Rational(x, resolution));
    out.emplace_back(std::move(coords));
  };
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == dimension - 1) {
      k[pos] = remaining;
      emit();
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      k[pos] = x;
      self(self, pos + 1, remaining - x);
    }
  };
  recurse(recurse, 0, resolution);
  return out;
}

RegularityReport VerifyTypeRegularity(const MultiGame& game,
                                      const Witness& witness, int resolution,
                                      Region region) {
  const int n = game.NumAgents();
  const int m = game.Dimension();
  if (witness.NumAgents() != n || witness.Dimension() != m) {
    throw InputError("witness shape does not match the multi-game");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (witness.At(i, j).Size() != game.Actions().Count(i)) {
        throw InputError("witness strategy has wrong action count");
      }
    }
  }

  std::vector<TypeProfile> profiles;
  const std::vector<SimplexPoint> grid = SimplexGrid(m, resolution);
  if (region == Region::kFullGrid) {
    ProfileSpace space(std::vector<int>(n, static_cast<int>(grid.size())));
    for (std::size_t flat = 0; flat < space.NumProfiles(); ++flat) {
      TypeProfile t;
      for (int idx : space.Unflatten(flat)) t.push_back(grid[idx]);
      profiles.push_back(std::move(t));
    }
  } else {
    std::set<TypeProfile> seen;
    ProfileSpace vertex_space(std::vector<int>(n, m));
    for (std::size_t flat = 0; flat < vertex_space.NumProfiles(); ++flat) {
      const TypeProfile base = VertexProfile(vertex_space.Unflatten(flat), m);
      if (region == Region::kVertices) {
        profiles.push_back(base);
        continue;
      }
      for (int i = 0; i < n; ++i) {
        for (const SimplexPoint& p : grid) {
          TypeProfile t = base;
          t[i] = p;
          if (seen.insert(t).second) profiles.push_back(std::move(t));
        }
      }
    }
  }

  RegularityReport report;
  report.witness = witness;
  for (const TypeProfile& types : profiles) {
    const NormalFormGame local = game.LocalGame(types);
    const MixedProfile profile = witness.Extend(types);
    if (auto dev = FindProfitableDeviation(local, profile)) {
      report.violations.push_back({types, dev->agent, dev->action, dev->gain});
    }
  }
  report.profiles_checked = profiles.size();
  report.status = report.violations.empty() ? RegularityStatus::kCertified
                                            : RegularityStatus::kRefuted;
  return report;
}

}  // namespace typereg
