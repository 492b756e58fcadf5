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

#include "doctest.h"
#include "typereg/errors.h"
#include "typereg/instances.h"

namespace typereg {
namespace {

const Rational kTwoThirds(2, 3);

TEST_CASE("trust game layout with sender grid {0,1}") {
  const TrustStageGame g = StandardTrustGame();
  CHECK(g.SenderActions() == std::vector<Rational>{0, 1});
  CHECK(g.ReceiverActions(0) == std::vector<Rational>{0});
  CHECK(g.ReceiverActions(1) == std::vector<Rational>{0, 1, 2, 3});
}

TEST_CASE("blended utilities at theta1 = 1/4, theta2 = 2/3") {
  // 3x/4 - y/2 for the sender and x/3 - y/3 for the receiver.
  const TrustStageGame g = StandardTrustGame();
  for (const Rational y : {Rational(0), Rational(1)}) {
    for (const Rational& x : g.ReceiverActions(g.SenderIndex(y))) {
      CHECK(g.SenderUtility(y, x) == Rational(3, 4) * x - y / 2);
      CHECK(g.ReceiverUtility(y, x, kTwoThirds) == x / 3 - y / 3);
    }
  }
}

TEST_CASE("blend endpoints are the material and social games") {
  const TrustStageGame material({0, Rational(1, 2), 1}, 0, {0});
  const TrustStageGame social({0, Rational(1, 2), 1}, 1, {1});
  for (const Rational& y : material.SenderActions()) {
    for (const Rational& x : material.ReceiverActions(material.SenderIndex(y))) {
      CHECK(material.SenderUtility(y, x) == x - y);
      CHECK(material.ReceiverUtility(y, x, 0) == 3 * y - x);
      CHECK(social.SenderUtility(y, x) == y);
      CHECK(social.ReceiverUtility(y, x, 1) == x - 2 * y);
    }
  }
}

TEST_CASE("receiver best replies") {
  const TrustStageGame g = StandardTrustGame();
  CHECK(ReceiverBestReply(g, 1, kTwoThirds) == std::vector<Rational>{3});
  CHECK(ReceiverBestReply(g, 1, 0) == std::vector<Rational>{0});
  CHECK(ReceiverBestReply(g, 0, kTwoThirds) == std::vector<Rational>{0});
  // At theta2 = 1/2 the receiver's utility does not depend on x.
  const TrustStageGame tie({1}, Rational(1, 4), {Rational(1, 2)});
  CHECK(ReceiverBestReply(tie, 1, Rational(1, 2)) == std::vector<Rational>{0, 1, 2, 3});
}

TEST_CASE("pure material game: nobody sends anything") {
  const TrustStageGame g({0, Rational(1, 2), 1}, 0, {0});
  const SpeResult r = SolveSubgamePerfect(g, {1});
  CHECK(r.sender_policy == std::vector<Rational>{0});
  CHECK(r.receiver_policy[0] == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("pure social game: send 1, return 3") {
  const TrustStageGame g({0, Rational(1, 2), 1}, 1, {1});
  const SpeResult r = SolveSubgamePerfect(g, {1});
  CHECK(r.sender_policy == std::vector<Rational>{1});
  CHECK(r.receiver_policy[0].back() == Rational(3));
}

TEST_CASE("sender switches at belief 7/9") {
  const TrustStageGame g = StandardTrustGame();
  // Expected utility of sending y is p0 (-9y/4) + 7y/4 with p0 the mass on
  // the selfish receiver.
  for (const Rational p0 : {Rational(0), Rational(1, 2), Rational(7, 9), Rational(8, 9), Rational(1)}) {
    const SpeResult r = SpeWithBelief(g, p0);
    CHECK(r.sender_values[1] == p0 * Rational(-9, 4) + Rational(7, 4));
    CHECK(VerifySubgamePerfect(g, {p0, 1 - p0}, r).empty());
  }
  CHECK(SpeWithBelief(g, Rational(1, 2)).sender_policy == std::vector<Rational>{1});
  CHECK(SpeWithBelief(g, Rational(8, 9)).sender_policy == std::vector<Rational>{0});
  CHECK(SpeWithBelief(g, Rational(7, 9)).sender_policy == std::vector<Rational>{0, 1});
}

TEST_CASE("with the belief placed on the prosocial type the threshold is 2/9") {
  // Listing the receiver types as {2/3, 0} makes p0 the mass on 2/3. The
  // expected utility is then 9 p0 y / 4 - y / 2.
  const TrustStageGame g({0, 1}, Rational(1, 4), {kTwoThirds, 0});
  const SenderThreshold t = ComputeSenderThreshold(g);
  REQUIRE(t.value);
  CHECK(*t.value == Rational(2, 9));
  CHECK(SpeWithBelief(g, Rational(1, 9)).sender_policy == std::vector<Rational>{0});
  CHECK(SpeWithBelief(g, Rational(1, 2)).sender_policy == std::vector<Rational>{1});
}

TEST_CASE("threshold formula") {
  const SenderThreshold standard = ComputeSenderThreshold(StandardTrustGame());
  REQUIRE(standard.value);
  CHECK(*standard.value == Rational(7, 9));
  CHECK(standard.branch_slopes == std::vector<Rational>{Rational(-1, 2), Rational(7, 4)});

  // theta1 = 0: branches 2y and -y, so p0 (-3y) + 2y = 0 at 2/3.
  const SenderThreshold selfish =
      ComputeSenderThreshold(TrustStageGame({0, 1}, 0, {0, kTwoThirds}));
  REQUIRE(selfish.value);
  CHECK(*selfish.value == kTwoThirds);

  // theta1 >= 1/2: sending never hurts, both slopes nonnegative.
  const SenderThreshold generous =
      ComputeSenderThreshold(TrustStageGame({0, 1}, Rational(3, 4), {0, kTwoThirds}));
  CHECK_FALSE(generous.value);
  CHECK_FALSE(generous.reason.empty());
  CHECK_FALSE(ComputeSenderThreshold(TrustStageGame({0, 1}, 0, {0})).value);
}

TEST_CASE("sender policy is monotone in the belief around the threshold") {
  const TrustStageGame g({0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1},
                         Rational(1, 4), {0, kTwoThirds});
  Rational previous = 1;
  for (int k = 0; k <= 36; ++k) {
    const SpeResult r = SpeWithBelief(g, Rational(k, 36));
    CHECK(r.sender_policy.front() <= previous);
    previous = r.sender_policy.front();
    CHECK(VerifySubgamePerfect(g, {Rational(k, 36), 1 - Rational(k, 36)}, r).empty());
  }
}

TEST_CASE("fine receiver grids keep the 3y endpoint") {
  const TrustStageGame g({Rational(1, 3), Rational(2, 3)}, 0, {1}, Rational(1, 2));
  CHECK(g.ReceiverActions(0) == std::vector<Rational>{0, Rational(1, 2), 1});
  CHECK(g.ReceiverActions(1) == std::vector<Rational>{0, Rational(1, 2), 1, Rational(3, 2), 2});
}

TEST_CASE("infeasible trust games are rejected") {
  CHECK_THROWS_AS(TrustStageGame({0, Rational(3, 2)}, 0, {0}), InputError);
  CHECK_THROWS_AS(TrustStageGame({-1}, 0, {0}), InputError);
  CHECK_THROWS_AS(TrustStageGame({0, 1}, 2, {0}), InputError);
  CHECK_THROWS_AS(TrustStageGame({}, 0, {0}), InputError);
  CHECK_THROWS_AS(TrustStageGame({1}, 0, {0}, 0), InputError);
  CHECK_THROWS_AS(SpeWithBelief(StandardTrustGame(), Rational(3, 2)), InputError);
}

TEST_CASE("deviation check flags a wrong policy") {
  const TrustStageGame g = StandardTrustGame();
  const std::vector<Rational> belief = {Rational(1, 2), Rational(1, 2)};
  SpeResult stingy = SpeWithBelief(g, Rational(1, 2));
  stingy.receiver_policy[1][1] = 1;  // prosocial receiver returns too little
  // The receiver deviation is flagged, and against the stingy reply sending 1
  // is worth -1/8, so the sender's choice of 1 is flagged as well.
  CHECK(VerifySubgamePerfect(g, belief, stingy).size() == 2);
  SpeResult timid = SpeWithBelief(g, Rational(1, 2));
  timid.sender_policy = {0};  // sending 1 is worth 5/8 here
  CHECK(VerifySubgamePerfect(g, belief, timid).size() == 1);
}

TEST_CASE("prisoner's dilemma double game validates its parameters") {
  CHECK_NOTHROW(BuildPrisonersDilemmaDoubleGame(5, 3, 1, 0, 2, 0));
  auto message = [](auto&&... args) {
    try {
      BuildPrisonersDilemmaDoubleGame(args...);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(5, 3, 1, 0, 0, 0) == "y>z violated");
  CHECK(message(3, 5, 1, 0, 2, 0) == "t>r violated");
  CHECK(message(5, 3, 3, 0, 2, 0) == "r>p violated");
  CHECK(message(5, 3, 1, 1, 2, 1) == "p>s violated");
  CHECK(message(7, 3, 1, 0, 2, 0) == "2r>t+s violated");
  CHECK(message(5, 3, 1, 0, 2, 1) == "z=s violated");
  const MultiGame g = BuildPrisonersDilemmaDoubleGame(5, 3, 1, 0, 2, 0);
  CHECK(g.Actions().Labels(0) == std::vector<std::string>{"C", "D"});
  CHECK(g.Basic(0).PurePayoff({1, 0}) == std::vector<Rational>{5, 0});
  CHECK(g.Basic(1).PurePayoff({0, 1}) == std::vector<Rational>{2, 0});
}

}  // namespace
}  // namespace typereg
