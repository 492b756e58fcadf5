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

#include "typereg/commands.h"

#include <sstream>
#include <utility>

#include "typereg/errors.h"
#include "typereg/game_file.h"
#include "typereg/instances.h"
#include "typereg/linear_transform.h"
#include "typereg/ne_solver.h"
#include "typereg/prior_independence.h"
#include "typereg/regularity.h"
#include "typereg/staged.h"

namespace typereg {
namespace {

using ojson = nlohmann::ordered_json;

// Keep full-grid verification below this many type profiles; larger
// instances fall back to the boundary region.
constexpr std::size_t kFullGridLimit = 2'000'000;
constexpr std::size_t kMaxCounterexamples = 5;

ojson Header(const std::string& command, const std::string& digest_input) {
  return {{"command", command}, {"input_digest", Fnv1a64(digest_input)}};
}

std::string StrategyText(const MixedStrategy& s,
                         const std::vector<std::string>& labels) {
  const std::vector<int> support = s.Support();
  if (support.size() == 1) return labels[support[0]];
  std::string out = "(";
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k) out += ", ";
    out += s[support[k]].ToString() + " " + labels[support[k]];
  }
  return out + ")";
}

ojson StrategyJson(const MixedStrategy& s, const std::vector<std::string>& labels) {
  ojson out = ojson::object();
  for (int a = 0; a < s.Size(); ++a) out[labels[a]] = s[a].ToString();
  return out;
}

ojson RationalArray(const std::vector<Rational>& v) {
  ojson out = ojson::array();
  for (const Rational& x : v) out.push_back(x.ToString());
  return out;
}

ojson TypesJson(const TypeProfile& types) {
  ojson out = ojson::array();
  for (const SimplexPoint& t : types) out.push_back(RationalArray(t.Coords()));
  return out;
}

std::string TypesText(const TypeProfile& types) {
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out += " ";
    out += types[i].ToString();
  }
  return out;
}

std::string Join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].ToString();
  }
  return out;
}

ojson ViolationJson(const RegularityViolation& v, const ActionSpace& actions) {
  return {{"types", TypesJson(v.types)},
          {"agent", v.agent + 1},
          {"deviation", actions.Label(v.agent, v.deviation)},
          {"gain", v.gain.ToString()}};
}

std::string ViolationText(const RegularityViolation& v, const ActionSpace& actions) {
  return "types " + TypesText(v.types) + ": agent " + std::to_string(v.agent + 1) +
         " gains " + v.gain.ToString() + " by " + actions.Label(v.agent, v.deviation);
}

ojson WitnessJson(const Witness& w, const ActionSpace& actions) {
  ojson out = ojson::array();
  for (int i = 0; i < w.NumAgents(); ++i) {
    ojson per_vertex = ojson::array();
    for (int j = 0; j < w.Dimension(); ++j) {
      per_vertex.push_back(StrategyJson(w.At(i, j), actions.Labels(i)));
    }
    out.push_back(per_vertex);
  }
  return out;
}

// sigma_i(theta) = sum_j theta_j sigma_i(v_j), written out per agent.
ojson ExtendedWitnessJson(const Witness& w, const ActionSpace& actions,
                          std::vector<std::string>& lines) {
  ojson out = ojson::array();
  for (int i = 0; i < w.NumAgents(); ++i) {
    std::string formula;
    ojson coeff = ojson::object();
    for (int a = 0; a < actions.Count(i); ++a) {
      ojson row = ojson::array();
      for (int j = 0; j < w.Dimension(); ++j) row.push_back(w.At(i, j)[a].ToString());
      coeff[actions.Label(i, a)] = row;
    }
    for (int j = 0; j < w.Dimension(); ++j) {
      if (j) formula += " + ";
      formula += "theta" + std::to_string(j + 1) + "*" +
                 StrategyText(w.At(i, j), actions.Labels(i));
    }
    out.push_back({{"agent", i + 1}, {"formula", formula}, {"coefficients", coeff}});
    lines.push_back("  agent " + std::to_string(i + 1) + ": sigma(theta) = " + formula);
  }
  return out;
}

std::size_t Binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Vertex search followed by grid verification of the extended witness.
// Fills report fields and returns the overall status.
std::string RegularityPipeline(const MultiGame& game, int grid, ojson& report,
                               std::vector<std::string>& lines) {
  const ActionSpace& actions = game.Actions();
  const RegularityReport search = SearchVertexWitness(game);
  ojson s = {{"status", ToString(search.status)},
             {"vertex_profiles", search.profiles_checked}};
  if (!search.note.empty()) s["note"] = search.note;
  report["vertex_search"] = s;
  lines.push_back("vertex search: " + ToString(search.status) + " over " +
                  std::to_string(search.profiles_checked) + " vertex profiles");

  if (search.status != RegularityStatus::kCertified) {
    if (search.witness) report["closest_witness"] = WitnessJson(*search.witness, actions);
    ojson ce = ojson::array();
    for (const RegularityViolation& v : search.violations) {
      ce.push_back(ViolationJson(v, actions));
      lines.push_back("  counterexample: " + ViolationText(v, actions));
    }
    report["counterexamples"] = ce;
    if (!search.note.empty()) lines.push_back("  " + search.note);
    return ToString(search.status);
  }

  const Witness& w = *search.witness;
  report["witness"] = WitnessJson(w, actions);
  lines.push_back("witness:");
  for (int i = 0; i < w.NumAgents(); ++i) {
    std::string row = "  agent " + std::to_string(i + 1) + ":";
    for (int j = 0; j < w.Dimension(); ++j) {
      row += " v" + std::to_string(j + 1) + "->" + StrategyText(w.At(i, j), actions.Labels(i));
    }
    lines.push_back(row);
  }
  lines.push_back("extended witness:");
  report["extended_witness"] = ExtendedWitnessJson(w, actions, lines);

  const std::size_t per_agent = Binomial(grid + game.Dimension() - 1, game.Dimension() - 1);
  std::size_t full = 1;
  for (int i = 0; i < game.NumAgents() && full <= kFullGridLimit; ++i) full *= per_agent;
  const Region region = full <= kFullGridLimit ? Region::kFullGrid : Region::kBoundary;
  const RegularityReport verify = VerifyTypeRegularity(game, w, grid, region);
  ojson ce = ojson::array();
  for (std::size_t k = 0; k < verify.violations.size() && k < kMaxCounterexamples; ++k) {
    ce.push_back(ViolationJson(verify.violations[k], actions));
  }
  report["grid_verification"] = {
      {"resolution", grid},
      {"region", region == Region::kFullGrid ? "full_grid" : "boundary"},
      {"points_per_agent", per_agent},
      {"profiles", verify.profiles_checked},
      {"violations", verify.violations.size()},
      {"counterexamples", ce}};
  lines.push_back("grid verification (d=" + std::to_string(grid) + ", " +
                  (region == Region::kFullGrid ? "full grid" : "boundary") + "): " +
                  std::to_string(verify.profiles_checked) + " profiles, " +
                  std::to_string(verify.violations.size()) + " violations");
  for (std::size_t k = 0; k < verify.violations.size() && k < kMaxCounterexamples; ++k) {
    lines.push_back("  counterexample: " + ViolationText(verify.violations[k], actions));
  }
  if (!verify.violations.empty()) {
    lines.push_back("  the vertex witness holds, but its barycentric extension is not an "
                    "equilibrium at the points above");
    return "refuted";
  }
  return "certified";
}

int ExitFor(const std::string& status) {
  return status == "certified" || status == "valid" || status == "ok" ? kExitOk
                                                                      : kExitRefuted;
}

MultiGame AsMultiGame(const GameDocument& doc) {
  if (const auto* mg = std::get_if<MultiGame>(&doc)) return *mg;
  if (const auto* pd = std::get_if<PdParams>(&doc)) return pd->Build();
  if (const auto* own = std::get_if<OwnTypeLinearGame>(&doc)) return ToMultiGame(*own);
  throw InputError("expected a multi_game, pd_dg or own-type type_linear game, got " +
                   KindName(doc));
}

std::vector<Rational> ParseList(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(Rational::Parse(part));
    } catch (const InputError& e) {
      throw InputError(flag + ": " + e.what());
    }
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

Rational ParseOne(const std::string& text, const std::string& flag) {
  try {
    return Rational::Parse(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

void AddAudit(const FiniteBayesianGame& game, const StrategyMapProfile& maps,
              const CommandOptions& options, ojson& report,
              std::vector<std::string>& lines) {
  const PriorIndependenceReport audit =
      AuditPriorIndependence(game, maps, options.priors, options.seed);
  const ProfileSpace& types = game.Types();
  const ActionSpace& actions = game.Actions();
  ojson failures = ojson::array();
  for (const LocalFailure& f : audit.local_failures) {
    failures.push_back({{"types", types.ProfileLabel(f.types)},
                        {"agent", f.agent + 1},
                        {"deviation", actions.Label(f.agent, f.deviation)},
                        {"gain", f.gain.ToString()}});
  }
  report["local_nash_everywhere"] = audit.local_nash_everywhere;
  report["local_games_checked"] = types.NumProfiles();
  report["local_failures"] = failures;
  report["point_mass_priors"] = {
      {"tested", audit.point_mass_priors},
      {"bne", audit.point_mass_bne},
      {"falsifying", audit.falsifying_point_mass
                         ? ojson(types.ProfileLabel(*audit.falsifying_point_mass))
                         : ojson(nullptr)}};
  report["random_priors"] = {{"tested", audit.random_priors},
                             {"bne", audit.random_bne},
                             {"seed", audit.seed}};
  report["agree"] = audit.Agree();

  lines.push_back(std::string("(A) Nash equilibrium of every local game: ") +
                  (audit.local_nash_everywhere ? "yes" : "no") + " (" +
                  std::to_string(types.NumProfiles()) + " local games)");
  for (const LocalFailure& f : audit.local_failures) {
    lines.push_back("  local game " + types.ProfileLabel(f.types) + ": agent " +
                    std::to_string(f.agent + 1) + " gains " + f.gain.ToString() +
                    " by " + actions.Label(f.agent, f.deviation));
  }
  lines.push_back("(B) BNE under point-mass priors: " + std::to_string(audit.point_mass_bne) +
                  "/" + std::to_string(audit.point_mass_priors) +
                  ", random priors: " + std::to_string(audit.random_bne) + "/" +
                  std::to_string(audit.random_priors) + " (seed " +
                  std::to_string(audit.seed) + ")");
  if (audit.falsifying_point_mass) {
    lines.push_back("  point mass at " + types.ProfileLabel(*audit.falsifying_point_mass) +
                    " falsifies (B)");
  }
  lines.push_back(std::string("(A) and (B) agree: ") + (audit.Agree() ? "yes" : "no"));
}

std::string AuditStatus(const ojson& report) {
  if (!report["agree"].get<bool>()) return "disagreement";
  return report["local_nash_everywhere"].get<bool>() ? "valid" : "refuted";
}

// Examples --------------------------------------------------------------------

CommandResult ExamplePd(const ExampleOptions& o) {
  const std::string params = o.params.value_or("5,3,1,0,2,0");
  const std::vector<Rational> v = ParseList(params, "--params");
  if (v.size() != 6) throw InputError("--params needs six values t,r,p,s,y,z");
  const MultiGame game = BuildPrisonersDilemmaDoubleGame(v[0], v[1], v[2], v[3], v[4], v[5]);

  CommandResult out;
  out.report = Header("example", "pd " + params);
  out.report["example"] = "pd";
  out.report["params"] = RationalArray(v);
  auto& lines = out.lines;
  lines.push_back("Prisoner's Dilemma double game, (t,r,p,s,y,z) = (" + Join(v) + ")");
  std::string status = RegularityPipeline(game, o.common.grid, out.report, lines);

  // Against a defector, C and D tie where (1 - theta)(p - s) = theta (y - z).
  const Rational& p = v[2];
  const Rational& s = v[3];
  const Rational& y = v[4];
  const Rational& z = v[5];
  const Rational tie = (p - s) / ((p - s) + (y - z));
  const NormalFormGame tie_game =
      game.LocalGame({SimplexPoint::FromScalar(tie), SimplexPoint::FromScalar(tie)});
  const NEResult tie_ne = SupportEnumeration(tie_game);
  out.report["indifference_type"] = {{"theta", tie.ToString()},
                                     {"equilibria", tie_ne.equilibria.size()},
                                     {"degenerate", tie_ne.degenerate}};
  lines.push_back("indifference type theta = " + tie.ToString() + ": local game has " +
                  std::to_string(tie_ne.equilibria.size()) + " equilibria found" +
                  (tie_ne.degenerate ? " (degenerate)" : ""));

  if (o.theta1 || o.theta2) {
    if (!o.theta1 || !o.theta2) throw InputError("--theta1 and --theta2 go together");
    const TypeProfile types = {SimplexPoint::FromScalar(ParseOne(*o.theta1, "--theta1")),
                               SimplexPoint::FromScalar(ParseOne(*o.theta2, "--theta2"))};
    const Witness w = PrisonersDilemmaWitness();
    const MixedProfile profile = w.Extend(types);
    const NormalFormGame local = game.LocalGame(types);
    const auto dev = FindProfitableDeviation(local, profile);
    const ActionSpace& actions = game.Actions();
    ojson strategies = ojson::array();
    std::string text;
    for (int i = 0; i < 2; ++i) {
      strategies.push_back(StrategyJson(profile[i], actions.Labels(i)));
      text += (i ? ", " : "") + StrategyText(profile[i], actions.Labels(i));
    }
    ojson local_json = {{"types", {types[0][1].ToString(), types[1][1].ToString()}},
                        {"profile", strategies},
                        {"is_nash", !dev}};
    lines.push_back("extended witness at theta = (" + types[0][1].ToString() + ", " +
                    types[1][1].ToString() + "): " + text);
    if (dev) {
      local_json["deviation"] = {{"agent", dev->agent + 1},
                                 {"action", actions.Label(dev->agent, dev->action)},
                                 {"gain", dev->gain.ToString()}};
      lines.push_back("  not an equilibrium of the local game: agent " +
                      std::to_string(dev->agent + 1) + " gains " + dev->gain.ToString() +
                      " by " + actions.Label(dev->agent, dev->action));
      status = "refuted";
    } else {
      lines.push_back("  Nash equilibrium of the local game");
    }
    out.report["local_game"] = local_json;
  }
  out.report["status"] = status;
  lines.push_back("status: " + status);
  out.exit_code = ExitFor(status);
  return out;
}

std::string PolicyText(const std::vector<Rational>& ys) {
  if (ys.size() == 1) return "sends " + ys[0].ToString();
  return "indifferent over {" + Join(ys) + "}";
}

CommandResult ExampleTrust(const ExampleOptions& o) {
  if (o.sender_steps < 1) throw InputError("--sender-steps must be positive");
  const Rational theta1 = o.theta1 ? ParseOne(*o.theta1, "--theta1") : Rational(1, 4);
  const std::vector<Rational> theta2 =
      o.theta2 ? ParseList(*o.theta2, "--theta2") : std::vector<Rational>{0, Rational(2, 3)};
  std::vector<Rational> grid;
  for (int k = 0; k <= o.sender_steps; ++k) grid.push_back(Rational(k, o.sender_steps));
  const TrustStageGame game(grid, theta1, theta2);

  CommandResult out;
  std::string digest = "trust " + theta1.ToString() + " " + Join(theta2) + " " +
                       std::to_string(o.sender_steps);
  if (o.belief) digest += " " + *o.belief;
  out.report = Header("example", digest);
  out.report["example"] = "trust";
  out.report["sender_grid"] = RationalArray(game.SenderActions());
  out.report["sender_type"] = theta1.ToString();
  out.report["receiver_types"] = RationalArray(theta2);
  auto& lines = out.lines;
  lines.push_back("Trust double game: sender type " + theta1.ToString() +
                  ", receiver types {" + Join(theta2) + "}, sender grid {" +
                  Join(game.SenderActions()) + "}");

  const SenderThreshold threshold = ComputeSenderThreshold(game);
  std::vector<Rational> beliefs;
  if (threshold.value) {
    const Rational& t = *threshold.value;
    const Rational& a = threshold.branch_slopes[0];
    const Rational& b = threshold.branch_slopes[1];
    out.report["threshold"] = {{"p0", t.ToString()},
                               {"branch_slopes", RationalArray(threshold.branch_slopes)},
                               {"expected_utility",
                                "p0*(" + (a - b).ToString() + ")*y + (" + b.ToString() + ")*y"}};
    lines.push_back("expected sender utility = p0*(" + (a - b).ToString() + ")*y + (" +
                    b.ToString() + ")*y, p0 = belief on receiver type " +
                    theta2[0].ToString());
    lines.push_back("threshold p0 = " + t.ToString());
    beliefs = {t / 2, t, (1 + t) / 2};
  } else {
    out.report["threshold"] = {{"p0", nullptr}, {"reason", threshold.reason}};
    lines.push_back("no threshold: " + threshold.reason);
    if (theta2.size() == 2) beliefs = {0, Rational(1, 2), 1};
  }
  if (o.belief) {
    if (theta2.size() != 2) throw InputError("--belief needs exactly two receiver types");
    beliefs = {ParseOne(*o.belief, "--belief")};
  }

  ojson results = ojson::array();
  for (const Rational& p0 : beliefs) {
    const SpeResult spe = SpeWithBelief(game, p0);
    const auto failures = VerifySubgamePerfect(game, {p0, 1 - p0}, spe);
    ojson receiver = ojson::array();
    for (std::size_t k = 0; k < theta2.size(); ++k) {
      ojson per_y = ojson::array();
      for (std::size_t yi = 0; yi < game.SenderActions().size(); ++yi) {
        per_y.push_back({{"y", game.SenderActions()[yi].ToString()},
                         {"best_replies", RationalArray(spe.receiver_replies[k][yi])},
                         {"played", spe.receiver_policy[k][yi].ToString()}});
      }
      receiver.push_back({{"type", theta2[k].ToString()}, {"policy", per_y}});
    }
    results.push_back({{"p0", p0.ToString()},
                       {"sender_policy", RationalArray(spe.sender_policy)},
                       {"sender_values", RationalArray(spe.sender_values)},
                       {"receiver", receiver},
                       {"subgame_perfect", failures.empty()}});
    lines.push_back("p0 = " + p0.ToString() + ": sender " + PolicyText(spe.sender_policy) +
                    (failures.empty() ? "" : " [not subgame perfect]"));
  }
  out.report["beliefs"] = results;
  out.report["status"] = "ok";
  out.exit_code = kExitOk;
  return out;
}

CommandResult ExampleMarkets(const ExampleOptions& o) {
  CommandResult out;
  out.report = Header("example", "markets " + std::to_string(o.common.grid));
  out.report["example"] = "markets";
  out.lines.push_back("two firms, three markets, full simplex types");
  const std::string status =
      RegularityPipeline(MarketsMultiGame(), o.common.grid, out.report, out.lines);
  out.report["status"] = status;
  out.lines.push_back("status: " + status);
  out.exit_code = ExitFor(status);
  return out;
}

CommandResult ExampleCoordination(const ExampleOptions& o) {
  const std::string params = o.params.value_or("2,1,2,1");
  const std::vector<Rational> v = ParseList(params, "--params");
  if (v.size() != 4) throw InputError("--params needs four values x,y,z,w");
  const MultiGame full = CoordinationDoubleGame(v[0], v[1], v[2], v[3]);

  CommandResult out;
  out.report = Header("example", "coordination " + params + " " +
                                     std::to_string(o.common.grid) + " " +
                                     std::to_string(o.common.priors) + " " +
                                     std::to_string(o.common.seed));
  out.report["example"] = "coordination";
  out.report["params"] = RationalArray(v);
  auto& lines = out.lines;
  lines.push_back("coordination double game, (x,y,z,w) = (" + Join(v) + ")");
  const std::string regularity = RegularityPipeline(full, o.common.grid, out.report, lines);

  // The same game on types {0,1} with the constant a1 maps.
  const TypeSpace corners = TypeSpace::Finite({SimplexPoint::Vertex(2, 0), SimplexPoint::Vertex(2, 1)});
  const FiniteBayesianGame bayes =
      ToFiniteBayesianGame(MultiGame(full.BasicGames(), {corners, corners}));
  const StrategyMap constant(2, MixedStrategy::Pure(2, 0));
  ojson audit;
  lines.push_back("constant a1 maps on types {0,1}:");
  AddAudit(bayes, {constant, constant}, o.common, audit, lines);
  out.report["bne_audit"] = audit;
  const std::string bne = AuditStatus(audit);
  const std::string status =
      regularity == "certified" && bne == "valid" ? "certified" : "refuted";
  out.report["status"] = status;
  lines.push_back("status: " + status);
  out.exit_code = ExitFor(status);
  return out;
}

}  // namespace

std::string Fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

CommandResult RunSolve(const std::string& game_text, const CommandOptions&) {
  const GameDocument doc = ParseGameDocument(game_text);
  const auto* game = std::get_if<NormalFormGame>(&doc);
  if (!game) throw InputError("solve expects a normal_form game, got " + KindName(doc));
  const ActionSpace& actions = game->Actions();

  CommandResult out;
  out.report = Header("solve", game_text);
  out.report["kind"] = KindName(doc);
  ojson pure = ojson::array();
  for (const Equilibrium& eq : EnumeratePureNash(*game).equilibria) {
    Profile p;
    for (const MixedStrategy& s : eq.profile) p.push_back(s.Support()[0]);
    ojson labels = ojson::array();
    for (int i = 0; i < actions.NumAgents(); ++i) labels.push_back(actions.Label(i, p[i]));
    const std::vector<Rational> pay = game->PurePayoff(p);
    pure.push_back({{"profile", labels}, {"payoffs", RationalArray(pay)}});
    out.lines.push_back("pure NE " + actions.ProfileLabel(p) + " payoffs (" + Join(pay) + ")");
  }
  if (pure.empty()) out.lines.push_back("no pure NE");
  out.report["pure_equilibria"] = pure;

  if (actions.NumAgents() == 2) {
    const NEResult ne = SupportEnumeration(*game);
    ojson all = ojson::array();
    for (const Equilibrium& eq : ne.equilibria) {
      ojson strategies = ojson::array();
      std::string text;
      for (int i = 0; i < 2; ++i) {
        strategies.push_back(StrategyJson(eq.profile[i], actions.Labels(i)));
        text += (i ? ", " : "") + StrategyText(eq.profile[i], actions.Labels(i));
      }
      const std::vector<Rational> pay = game->MixedPayoff(eq.profile);
      all.push_back({{"strategies", strategies},
                     {"payoffs", RationalArray(pay)},
                     {"pure", eq.pure}});
      out.lines.push_back("NE " + text + " payoffs (" + Join(pay) + ")");
    }
    out.report["equilibria"] = all;
    out.report["degenerate"] = ne.degenerate;
    if (ne.degenerate) {
      out.lines.push_back("game is degenerate; the equilibrium list may be incomplete");
    }
  } else {
    out.report["equilibria"] = nullptr;
    out.lines.push_back("support enumeration skipped: needs exactly two agents");
  }
  out.report["status"] = "ok";
  return out;
}

CommandResult RunCheckRegularity(const std::string& game_text,
                                 const CommandOptions& options) {
  if (options.grid < 1) throw InputError("--grid must be positive");
  const GameDocument doc = ParseGameDocument(game_text);
  MultiGame game = AsMultiGame(doc);
  CommandResult out;
  out.report = Header("check-regularity", game_text + "\n" + std::to_string(options.grid));
  out.report["kind"] = KindName(doc);
  bool finite = false;
  for (int i = 0; i < game.NumAgents(); ++i) finite = finite || !game.Types(i).full_simplex;
  if (finite) {
    out.report["note"] = "type spaces ignored: regularity is checked on the full simplex";
    out.lines.push_back("note: type spaces ignored, checking the full simplex");
    game = MultiGame(game.BasicGames());
  }
  const std::string status = RegularityPipeline(game, options.grid, out.report, out.lines);
  out.report["status"] = status;
  out.lines.push_back("status: " + status);
  out.exit_code = ExitFor(status);
  return out;
}

CommandResult RunVerifyBne(const std::string& game_text,
                           const std::string& strategy_text,
                           const CommandOptions& options) {
  if (options.priors < 0) throw InputError("--priors must be nonnegative");
  const GameDocument doc = ParseGameDocument(game_text);
  std::optional<Prior> file_prior;
  FiniteBayesianGame game;
  if (const auto* b = std::get_if<BayesianFile>(&doc)) {
    game = b->game;
    file_prior = b->prior;
  } else if (const auto* mg = std::get_if<MultiGame>(&doc)) {
    game = ToFiniteBayesianGame(*mg);
  } else {
    throw InputError("verify-bne expects a bayesian_finite game or a multi_game with "
                     "finite type spaces, got " + KindName(doc));
  }
  const StrategyMapProfile maps = ParseStrategyFile(strategy_text, game);

  CommandResult out;
  out.report = Header("verify-bne", game_text + '\0' + strategy_text);
  out.report["kind"] = KindName(doc);
  AddAudit(game, maps, options, out.report, out.lines);
  if (file_prior) {
    const bool ok = IsBayesNash(game, maps, *file_prior);
    out.report["file_prior_bne"] = ok;
    out.lines.push_back(std::string("BNE under the prior in the file: ") + (ok ? "yes" : "no"));
  }
  const std::string status = AuditStatus(out.report);
  out.report["status"] = status;
  out.lines.push_back("status: " + status);
  out.exit_code = ExitFor(status);
  return out;
}

CommandResult RunExample(const std::string& name, const ExampleOptions& options) {
  if (options.common.grid < 1) throw InputError("--grid must be positive");
  if (name == "pd") return ExamplePd(options);
  if (name == "trust") return ExampleTrust(options);
  if (name == "markets") return ExampleMarkets(options);
  if (name == "coordination") return ExampleCoordination(options);
  throw InputError("unknown example \"" + name + "\" (pd, trust, markets, coordination)");
}

CommandResult RunCanonicalize(const std::string& game_text) {
  const GameDocument doc = ParseGameDocument(game_text);
  CommandResult out;
  out.report = SerializeGameDocument(doc);
  std::stringstream ss(out.report.dump(2));
  for (std::string line; std::getline(ss, line);) out.lines.push_back(line);
  return out;
}

}  // namespace typereg
