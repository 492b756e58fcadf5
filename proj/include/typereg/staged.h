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

// Two-stage double games. The Trust double game blends the material Trust
// game (sender utility x - y, receiver 3y - x) with a social game (sender y,
// receiver x - 2y) using the weight (1 - theta, theta) for each agent.
// The sender moves first with y in [0,1]; the receiver returns x in [0,3y].
// Both action sets are discretized.

#ifndef TYPEREG_STAGED_H_
#define TYPEREG_STAGED_H_

#include <optional>
#include <string>
#include <vector>

#include "typereg/game.h"

namespace typereg {

class TrustStageGame {
 public:
  // sender_grid values must lie in [0,1]; they are sorted and deduplicated.
  // Receiver actions at node y are {0, step, 2 step, ...} below 3y plus 3y.
  TrustStageGame(std::vector<Rational> sender_grid, Rational theta1,
                 std::vector<Rational> receiver_types,
                 Rational receiver_step = Rational(1));

  const std::vector<Rational>& SenderActions() const { return sender_; }
  const std::vector<Rational>& ReceiverActions(int sender_index) const {
    return receiver_.at(sender_index);
  }
  const Rational& SenderType() const { return theta1_; }
  const std::vector<Rational>& ReceiverTypes() const { return theta2_; }
  const Rational& ReceiverStep() const { return step_; }
  int SenderIndex(const Rational& y) const;

  static Rational MaterialSender(const Rational& y, const Rational& x) { return x - y; }
  static Rational MaterialReceiver(const Rational& y, const Rational& x) {
    return 3 * y - x;
  }
  static Rational SocialSender(const Rational& y, const Rational&) { return y; }
  static Rational SocialReceiver(const Rational& y, const Rational& x) {
    return x - 2 * y;
  }

  Rational SenderUtility(const Rational& y, const Rational& x) const;
  Rational ReceiverUtility(const Rational& y, const Rational& x,
                           const Rational& theta2) const;

 private:
  std::vector<Rational> sender_;
  std::vector<std::vector<Rational>> receiver_;
  Rational theta1_;
  std::vector<Rational> theta2_;
  Rational step_;
};

inline TrustStageGame BuildTrustDoubleGame(std::vector<Rational> sender_grid,
                                           Rational theta1,
                                           std::vector<Rational> receiver_types,
                                           Rational receiver_step = Rational(1)) {
  return TrustStageGame(std::move(sender_grid), std::move(theta1),
                        std::move(receiver_types), std::move(receiver_step));
}

// Feasible returns maximizing the receiver's blended utility, ascending.
std::vector<Rational> ReceiverBestReply(const TrustStageGame& game,
                                        const Rational& y,
                                        const Rational& theta2);

struct SpeResult {
  // receiver_replies[type][sender index]: the full best-reply set.
  std::vector<std::vector<std::vector<Rational>>> receiver_replies;
  // The reply actually played: the smallest element of each set.
  std::vector<std::vector<Rational>> receiver_policy;
  // Sender's expected utility for each sender action under the belief.
  std::vector<Rational> sender_values;
  // Every sender action attaining the maximum, ascending.
  std::vector<Rational> sender_policy;
};

// belief[k] is the sender's probability of receiver type k.
SpeResult SolveSubgamePerfect(const TrustStageGame& game,
                              const std::vector<Rational>& belief);

// Two receiver types; p0 is the mass on the first listed type, 1 - p0 on
// the second. With types {0, 2/3} the sender's expected utility is
// p0 (-9y/4) + 7y/4 at theta1 = 1/4.
SpeResult SpeWithBelief(const TrustStageGame& game, const Rational& p0);

struct SenderThreshold {
  std::optional<Rational> value;
  std::string reason;
  // d/dy of the sender's utility on each receiver type's branch.
  std::vector<Rational> branch_slopes;
};

// Belief p0 (mass on the first receiver type) at which the sender's expected
// utility vanishes for every y. Needs two receiver types whose branches
// have slopes of opposite sign.
SenderThreshold ComputeSenderThreshold(const TrustStageGame& game);

// One-shot deviation check of a solution on the finite tree, from scratch.
// Returns a description of every failure; empty means subgame perfect.
std::vector<std::string> VerifySubgamePerfect(const TrustStageGame& game,
                                              const std::vector<Rational>& belief,
                                              const SpeResult& result);

// Prisoner's Dilemma (t, r, p, s) blended with the social game that pays y
// for cooperating and z for defecting. Requires t > r > p > s, 2r > t + s,
// y > z and z = s; the error message names the first violated inequality.
// Actions are labeled C, D in that order.
MultiGame BuildPrisonersDilemmaDoubleGame(const Rational& t, const Rational& r,
                                          const Rational& p, const Rational& s,
                                          const Rational& y, const Rational& z);

}  // namespace typereg

#endif  // TYPEREG_STAGED_H_
