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

#include "typereg/ne_solver.h"

#include <algorithm>
#include <utility>

#include "typereg/errors.h"
#include "typereg/linear_system.h"

namespace typereg {
namespace {

Rational Dot(const MixedStrategy& s, const std::vector<Rational>& v) {
  Rational total;
  for (int a = 0; a < s.Size(); ++a) {
    if (!s[a].IsZero()) total += s[a] * v[a];
  }
  return total;
}

// Every k-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

// Solves for the mixture 'mix' of the opponent on 'mix_support' making every
// action of 'own_support' indifferent for the owner of 'payoff'.
// payoff(own, other) is the owner's payoff. Returns nullopt when no unique
// nonnegative solution with full support exists; sets *degenerate on a
// continuum.
template <typename PayoffFn>
std::optional<std::vector<Rational>> SolveIndifference(
    const std::vector<int>& own_support, const std::vector<int>& mix_support,
    int mix_size, PayoffFn payoff, bool* degenerate) {
  const int k = static_cast<int>(own_support.size());
  // Unknowns: mix over mix_support (k of them) and the common value v.
  std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1));
  std::vector<Rational> b(k + 1);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) a[r][c] = payoff(own_support[r], mix_support[c]);
    a[r][k] = -1;
  }
  for (int c = 0; c < k; ++c) a[k][c] = 1;
  b[k] = 1;
  LinearSolution sol = SolveLinearSystem(std::move(a), std::move(b));
  if (sol.status == SolveStatus::kUnderdetermined) {
    *degenerate = true;
    return std::nullopt;
  }
  if (sol.status == SolveStatus::kInconsistent) return std::nullopt;
  std::vector<Rational> mix(mix_size);
  for (int c = 0; c < k; ++c) {
    if (sol.x[c].Sign() <= 0) return std::nullopt;
    mix[mix_support[c]] = sol.x[c];
  }
  return mix;
}

// Vertices of {(x, v) : x >= 0, sum x = 1, payoff(., j) . x <= v for all j}
// for the mixture x of one agent, where payoff(own, other) belongs to the
// opponent. Each vertex fixes own_size of the own_size + other_size
// inequalities as equalities.
template <typename PayoffFn>
std::vector<std::vector<Rational>> BestResponseVertices(int own_size, int other_size,
                                                        PayoffFn payoff) {
  std::vector<std::vector<Rational>> out;
  const int total = own_size + other_size;
  for (const auto& tight : Subsets(total, own_size)) {
    // Unknowns x_0..x_{own_size-1}, v.
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int t : tight) {
      std::vector<Rational> row(own_size + 1);
      if (t < own_size) {
        row[t] = 1;
      } else {
        for (int i = 0; i < own_size; ++i) row[i] = payoff(t - own_size, i);
        row[own_size] = -1;
      }
      a.push_back(std::move(row));
      b.push_back(0);
    }
    std::vector<Rational> sum(own_size + 1, Rational(1));
    sum[own_size] = 0;
    a.push_back(std::move(sum));
    b.push_back(1);
    const LinearSolution sol = SolveLinearSystem(std::move(a), std::move(b));
    if (sol.status != SolveStatus::kUnique) continue;
    std::vector<Rational> x(sol.x.begin(), sol.x.begin() + own_size);
    if (std::any_of(x.begin(), x.end(), [](const Rational& q) { return q.Sign() < 0; })) {
      continue;
    }
    bool feasible = true;
    for (int j = 0; j < other_size && feasible; ++j) {
      Rational value;
      for (int i = 0; i < own_size; ++i) value += payoff(j, i) * x[i];
      feasible = value <= sol.x[own_size];
    }
    if (feasible && std::find(out.begin(), out.end(), x) == out.end()) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

std::vector<int> BestResponseSet(const NormalFormGame& game, int agent,
                                 std::span<const MixedStrategy> profile) {
  const std::vector<Rational> dev = game.DeviationPayoffs(agent, profile);
  const Rational best = *std::max_element(dev.begin(), dev.end());
  std::vector<int> out;
  for (std::size_t a = 0; a < dev.size(); ++a) {
    if (dev[a] == best) out.push_back(static_cast<int>(a));
  }
  return out;
}

std::optional<Deviation> FindProfitableDeviation(
    const NormalFormGame& game, std::span<const MixedStrategy> profile) {
  std::optional<Deviation> best;
  for (int i = 0; i < game.NumAgents(); ++i) {
    const std::vector<Rational> dev = game.DeviationPayoffs(i, profile);
    const Rational value = Dot(profile[i], dev);
    for (std::size_t a = 0; a < dev.size(); ++a) {
      const Rational gain = dev[a] - value;
      if (gain.Sign() > 0 && (!best || gain > best->gain)) {
        best = Deviation{i, static_cast<int>(a), gain};
      }
    }
  }
  return best;
}

bool IsNash(const NormalFormGame& game, std::span<const MixedStrategy> profile) {
  for (int i = 0; i < game.NumAgents(); ++i) {
    const std::vector<Rational> dev = game.DeviationPayoffs(i, profile);
    const Rational value = Dot(profile[i], dev);
    if (*std::max_element(dev.begin(), dev.end()) > value) return false;
  }
  return true;
}

NEResult EnumeratePureNash(const NormalFormGame& game) {
  NEResult result;
  const ActionSpace& actions = game.Actions();
  for (std::size_t flat = 0; flat < actions.NumProfiles(); ++flat) {
    const Profile p = actions.Unflatten(flat);
    bool stable = true;
    for (int i = 0; i < game.NumAgents() && stable; ++i) {
      Profile q = p;
      for (int a = 0; a < actions.Count(i) && stable; ++a) {
        q[i] = a;
        if (game.Payoff(i, q) > game.Payoff(i, flat)) stable = false;
      }
    }
    if (stable) result.equilibria.push_back({PureProfile(actions, p), true});
  }
  return result;
}

NEResult SupportEnumeration(const NormalFormGame& game) {
  if (game.NumAgents() != 2) {
    throw InputError("support enumeration needs a two-agent game, got " +
                     std::to_string(game.NumAgents()));
  }
  const int rows = game.Actions().Count(0);
  const int cols = game.Actions().Count(1);
  auto row_payoff = [&](int r, int c) -> const Rational& {
    return game.Payoff(0, static_cast<std::size_t>(r) * cols + c);
  };
  auto col_payoff = [&](int r, int c) -> const Rational& {
    return game.Payoff(1, static_cast<std::size_t>(r) * cols + c);
  };

  struct Found {
    std::vector<int> row_support, col_support;
    Equilibrium eq;
  };
  std::vector<Found> found;
  NEResult result;

  for (int k = 1; k <= std::min(rows, cols); ++k) {
    for (const auto& row_support : Subsets(rows, k)) {
      for (const auto& col_support : Subsets(cols, k)) {
        // Column mixture makes the row player indifferent over row_support,
        // and vice versa.
        auto y = SolveIndifference(
            row_support, col_support, cols,
            [&](int own, int other) { return row_payoff(own, other); },
            &result.degenerate);
        if (!y) continue;
        auto x = SolveIndifference(
            col_support, row_support, rows,
            [&](int own, int other) { return col_payoff(other, own); },
            &result.degenerate);
        if (!x) continue;
        MixedProfile profile{MixedStrategy(std::move(*x)),
                             MixedStrategy(std::move(*y))};
        if (!IsNash(game, profile)) continue;
        // Nondegenerate games never have more best responses than the
        // support size.
        if (static_cast<int>(BestResponseSet(game, 0, profile).size()) > k ||
            static_cast<int>(BestResponseSet(game, 1, profile).size()) > k) {
          result.degenerate = true;
        }
        found.push_back({row_support, col_support, {std::move(profile), k == 1}});
      }
    }
  }
  // Degenerate games can have every equilibrium on supports of unequal size.
  // Pairs of best-response polytope vertices cover the extreme equilibria,
  // of which there is always at least one.
  // A nondegenerate game always has an equilibrium on equal-size supports.
  if (found.empty()) result.degenerate = true;
  if (result.degenerate) {
    const auto xs = BestResponseVertices(
        rows, cols, [&](int c, int r) { return col_payoff(r, c); });
    const auto ys = BestResponseVertices(
        cols, rows, [&](int r, int c) { return row_payoff(r, c); });
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        MixedProfile profile{MixedStrategy(x), MixedStrategy(y)};
        if (!IsNash(game, profile)) continue;
        const bool seen = std::any_of(found.begin(), found.end(), [&](const Found& f) {
          return f.eq.profile == profile;
        });
        if (seen) continue;
        std::vector<int> rs = profile[0].Support();
        std::vector<int> cs = profile[1].Support();
        const bool pure = rs.size() == 1 && cs.size() == 1;
        found.push_back({std::move(rs), std::move(cs), {std::move(profile), pure}});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return std::tie(a.row_support, a.col_support) <
           std::tie(b.row_support, b.col_support);
  });
  for (Found& f : found) result.equilibria.push_back(std::move(f.eq));
  return result;
}

}  // namespace typereg
