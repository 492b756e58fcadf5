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

#include "typereg/staged.h"

#include <algorithm>
#include <utility>

#include "typereg/errors.h"

namespace typereg {
namespace {

void CheckUnit(const Rational& v, const std::string& what) {
  if (v.Sign() < 0 || v > Rational(1)) {
    throw InputError(what + " " + v.ToString() + " is outside [0,1]");
  }
}

}  // namespace

TrustStageGame::TrustStageGame(std::vector<Rational> sender_grid,
                               Rational theta1,
                               std::vector<Rational> receiver_types,
                               Rational receiver_step)
    : sender_(std::move(sender_grid)),
      theta1_(std::move(theta1)),
      theta2_(std::move(receiver_types)),
      step_(std::move(receiver_step)) {
  if (sender_.empty()) throw InputError("sender grid is empty");
  if (theta2_.empty()) throw InputError("receiver type set is empty");
  if (step_.Sign() <= 0) throw InputError("receiver step must be positive");
  for (const Rational& y : sender_) CheckUnit(y, "sender action");
  CheckUnit(theta1_, "sender type");
  for (const Rational& t : theta2_) CheckUnit(t, "receiver type");
  std::sort(sender_.begin(), sender_.end());
  sender_.erase(std::unique(sender_.begin(), sender_.end()), sender_.end());
  for (std::size_t k = 0; k < theta2_.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      if (theta2_[k] == theta2_[l]) throw InputError("duplicate receiver type");
    }
  }
  for (const Rational& y : sender_) {
    std::vector<Rational> xs;
    const Rational top = 3 * y;
    for (Rational x(0); x < top; x += step_) xs.push_back(x);
    xs.push_back(top);
    receiver_.push_back(std::move(xs));
  }
}

int TrustStageGame::SenderIndex(const Rational& y) const {
  auto it = std::lower_bound(sender_.begin(), sender_.end(), y);
  if (it == sender_.end() || *it != y) {
    throw InputError("sender action " + y.ToString() + " is not on the grid");
  }
  return static_cast<int>(it - sender_.begin());
}

Rational TrustStageGame::SenderUtility(const Rational& y,
                                       const Rational& x) const {
  return (1 - theta1_) * MaterialSender(y, x) + theta1_ * SocialSender(y, x);
}

Rational TrustStageGame::ReceiverUtility(const Rational& y, const Rational& x,
                                         const Rational& theta2) const {
  return (1 - theta2) * MaterialReceiver(y, x) + theta2 * SocialReceiver(y, x);
}

std::vector<Rational> ReceiverBestReply(const TrustStageGame& game,
                                        const Rational& y,
                                        const Rational& theta2) {
  const auto& xs = game.ReceiverActions(game.SenderIndex(y));
  std::vector<Rational> best;
  Rational best_value;
  for (const Rational& x : xs) {
    const Rational v = game.ReceiverUtility(y, x, theta2);
    if (best.empty() || v > best_value) {
      best = {x};
      best_value = v;
    } else if (v == best_value) {
      best.push_back(x);
    }
  }
  return best;
}

SpeResult SolveSubgamePerfect(const TrustStageGame& game,
                              const std::vector<Rational>& belief) {
  const auto& types = game.ReceiverTypes();
  if (belief.size() != types.size()) {
    throw InputError("belief must have one entry per receiver type");
  }
  Rational total;
  for (const Rational& b : belief) {
    if (b.Sign() < 0) throw InputError("belief entries must be nonnegative");
    total += b;
  }
  if (total != Rational(1)) throw InputError("belief must sum to 1");

  SpeResult out;
  const auto& ys = game.SenderActions();
  for (const Rational& theta2 : types) {
    std::vector<std::vector<Rational>> replies;
    std::vector<Rational> played;
    for (const Rational& y : ys) {
      replies.push_back(ReceiverBestReply(game, y, theta2));
      played.push_back(replies.back().front());
    }
    out.receiver_replies.push_back(std::move(replies));
    out.receiver_policy.push_back(std::move(played));
  }
  for (std::size_t yi = 0; yi < ys.size(); ++yi) {
    Rational value;
    for (std::size_t k = 0; k < types.size(); ++k) {
      value += belief[k] * game.SenderUtility(ys[yi], out.receiver_policy[k][yi]);
    }
    out.sender_values.push_back(value);
  }
  const Rational best =
      *std::max_element(out.sender_values.begin(), out.sender_values.end());
  for (std::size_t yi = 0; yi < ys.size(); ++yi) {
    if (out.sender_values[yi] == best) out.sender_policy.push_back(ys[yi]);
  }
  return out;
}

SpeResult SpeWithBelief(const TrustStageGame& game, const Rational& p0) {
  if (game.ReceiverTypes().size() != 2) {
    throw InputError("a scalar belief needs exactly two receiver types");
  }
  if (p0.Sign() < 0 || p0 > Rational(1)) {
    throw InputError("belief " + p0.ToString() + " is outside [0,1]");
  }
  return SolveSubgamePerfect(game, {p0, 1 - p0});
}

SenderThreshold ComputeSenderThreshold(const TrustStageGame& game) {
  SenderThreshold out;
  const auto& types = game.ReceiverTypes();
  if (types.size() != 2) {
    out.reason = "threshold needs exactly two receiver types";
    return out;
  }
  // The receiver's utility has slope 2 theta2 - 1 in x, so it returns 3y
  // above one half and 0 below; at one half the smallest reply (0) is
  // played. Either way the sender's utility is c y for a constant c.
  const Rational half(1, 2);
  for (const Rational& theta2 : types) {
    const Rational ratio = theta2 > half ? Rational(3) : Rational(0);
    out.branch_slopes.push_back(game.SenderUtility(Rational(1), ratio));
  }
  const Rational& a = out.branch_slopes[0];
  const Rational& b = out.branch_slopes[1];
  if (a.Sign() * b.Sign() >= 0) {
    out.reason = a.IsZero() && b.IsZero()
                     ? "sender is indifferent for every belief"
                     : "branch utilities do not change sign; no threshold";
    return out;
  }
  // p0 a + (1 - p0) b = 0.
  out.value = b / (b - a);
  return out;
}

std::vector<std::string> VerifySubgamePerfect(const TrustStageGame& game,
                                              const std::vector<Rational>& belief,
                                              const SpeResult& result) {
  std::vector<std::string> failures;
  const auto& ys = game.SenderActions();
  const auto& types = game.ReceiverTypes();
  for (std::size_t k = 0; k < types.size(); ++k) {
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      const Rational& x = result.receiver_policy.at(k).at(yi);
      const Rational here = game.ReceiverUtility(ys[yi], x, types[k]);
      for (const Rational& alt : game.ReceiverActions(static_cast<int>(yi))) {
        if (game.ReceiverUtility(ys[yi], alt, types[k]) > here) {
          failures.push_back("receiver type " + types[k].ToString() +
                             " at y=" + ys[yi].ToString() + " gains by x=" +
                             alt.ToString());
          break;
        }
      }
    }
  }
  auto expected = [&](std::size_t yi) {
    Rational v;
    for (std::size_t k = 0; k < types.size(); ++k) {
      v += belief[k] * game.SenderUtility(ys[yi], result.receiver_policy[k][yi]);
    }
    return v;
  };
  for (const Rational& y : result.sender_policy) {
    const Rational here = expected(game.SenderIndex(y));
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      if (expected(yi) > here) {
        failures.push_back("sender at y=" + y.ToString() + " gains by y=" +
                           ys[yi].ToString());
        break;
      }
    }
  }
  return failures;
}

MultiGame BuildPrisonersDilemmaDoubleGame(const Rational& t, const Rational& r,
                                          const Rational& p, const Rational& s,
                                          const Rational& y, const Rational& z) {
  if (!(t > r)) throw InputError("t>r violated");
  if (!(r > p)) throw InputError("r>p violated");
  if (!(p > s)) throw InputError("p>s violated");
  if (!(2 * r > t + s)) throw InputError("2r>t+s violated");
  if (!(y > z)) throw InputError("y>z violated");
  if (z != s) throw InputError("z=s violated");
  const std::vector<std::string> labels = {"C", "D"};
  NormalFormGame pd = NormalFormGame::Bimatrix(
      {{{r, r}, {s, t}}, {{t, s}, {p, p}}}, labels, labels);
  NormalFormGame sg = NormalFormGame::Bimatrix(
      {{{y, y}, {y, z}}, {{z, y}, {z, z}}}, labels, labels);
  return MultiGame({std::move(pd), std::move(sg)});
}

}  // namespace typereg
