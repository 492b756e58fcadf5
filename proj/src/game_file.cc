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

#include "typereg/game_file.h"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "typereg/errors.h"

namespace typereg {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// A JSON value together with its location, for error messages.
class Node {
 public:
  Node(const json& value, std::string path)
      : value_(&value), path_(std::move(path)) {}

  [[noreturn]] void Fail(const std::string& message) const {
    throw InputError(path_ + ": " + message);
  }

  const json& Value() const { return *value_; }
  const std::string& Path() const { return path_; }

  void ExpectObject() const {
    if (!value_->is_object()) Fail("expected an object");
  }
  void ExpectArray() const {
    if (!value_->is_array()) Fail("expected an array");
  }

  bool Has(const std::string& key) const {
    ExpectObject();
    return value_->contains(key);
  }
  Node At(const std::string& key) const {
    ExpectObject();
    auto it = value_->find(key);
    if (it == value_->end()) Fail("missing field \"" + key + "\"");
    return Node(*it, path_ + Child(key));
  }
  std::optional<Node> Find(const std::string& key) const {
    ExpectObject();
    auto it = value_->find(key);
    if (it == value_->end()) return std::nullopt;
    return Node(*it, path_ + Child(key));
  }
  std::size_t Size() const {
    ExpectArray();
    return value_->size();
  }
  Node At(std::size_t index) const {
    ExpectArray();
    return Node(value_->at(index), path_ + "[" + std::to_string(index) + "]");
  }
  std::vector<Node> Items() const {
    std::vector<Node> out;
    for (std::size_t i = 0; i < Size(); ++i) out.push_back(At(i));
    return out;
  }

  // Rejects fields outside 'allowed'.
  void OnlyFields(std::initializer_list<const char*> allowed) const {
    ExpectObject();
    for (auto it = value_->begin(); it != value_->end(); ++it) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || it.key() == a;
      if (!ok) Fail("unknown field \"" + it.key() + "\"");
    }
  }

  Rational AsRational() const {
    if (value_->is_string()) {
      try {
        return Rational::Parse(value_->get<std::string>());
      } catch (const InputError& e) {
        Fail(e.what());
      }
    }
    if (value_->is_number_integer()) {
      if (value_->is_number_unsigned()) {
        return Rational::Parse(std::to_string(value_->get<std::uint64_t>()));
      }
      return Rational(value_->get<long>());
    }
    if (value_->is_number_float()) {
      Fail("floating-point numbers are not exact; write \"p/q\" instead");
    }
    Fail("expected a rational such as \"3/4\"");
  }
  std::vector<Rational> AsRationalVector() const {
    std::vector<Rational> out;
    for (const Node& n : Items()) out.push_back(n.AsRational());
    return out;
  }
  std::string AsString() const {
    if (!value_->is_string()) Fail("expected a string");
    return value_->get<std::string>();
  }
  int AsPositiveInt() const {
    if (!value_->is_number_integer() || value_->get<long>() < 1) {
      Fail("expected a positive integer");
    }
    return value_->get<int>();
  }
  bool AsBool() const {
    if (!value_->is_boolean()) Fail("expected true or false");
    return value_->get<bool>();
  }

 private:
  static std::string Child(const std::string& key) {
    const bool plain = !key.empty() && key.find_first_of(",. []\"") == std::string::npos;
    return plain ? "." + key : "[\"" + key + "\"]";
  }

  const json* value_;
  std::string path_;
};

std::string JoinLabels(const ProfileSpace& space, const Profile& p) {
  std::string out;
  for (int i = 0; i < space.NumAgents(); ++i) {
    if (i) out += ",";
    out += space.Label(i, p[i]);
  }
  return out;
}

// Maps every "l1,l2,..." key of 'node' to its profile, requiring that the
// keys cover 'space' exactly.
std::vector<Node> ProfileTable(const Node& node, const ProfileSpace& space,
                               const std::string& what) {
  node.ExpectObject();
  std::vector<std::optional<Node>> cells(space.NumProfiles());
  for (auto it = node.Value().begin(); it != node.Value().end(); ++it) {
    const std::string& key = it.key();
    Profile p;
    std::stringstream ss(key);
    std::string part;
    int agent = 0;
    while (std::getline(ss, part, ',')) {
      if (agent >= space.NumAgents()) node.Fail("key \"" + key + "\" has too many entries");
      try {
        p.push_back(space.IndexOf(agent, part));
      } catch (const InputError&) {
        node.Fail("key \"" + key + "\": unknown label \"" + part +
                  "\" for agent " + std::to_string(agent + 1));
      }
      ++agent;
    }
    if (!key.empty() && key.back() == ',') node.Fail("key \"" + key + "\" ends with a comma");
    if (agent != space.NumAgents()) {
      node.Fail("key \"" + key + "\" needs " + std::to_string(space.NumAgents()) +
                " comma-separated labels");
    }
    cells[space.Flatten(p)] = node.At(key);
  }
  std::vector<Node> out;
  for (std::size_t flat = 0; flat < cells.size(); ++flat) {
    if (!cells[flat]) {
      node.Fail("missing " + what + " for profile " +
                space.ProfileLabel(space.Unflatten(flat)));
    }
    out.push_back(*cells[flat]);
  }
  return out;
}

ProfileSpace ParseSpace(const Node& node) {
  std::vector<std::vector<std::string>> labels;
  for (const Node& agent : node.Items()) {
    if (agent.Value().is_number_integer()) {
      const int count = agent.AsPositiveInt();
      std::vector<std::string> l;
      for (int a = 0; a < count; ++a) l.push_back(std::to_string(a));
      labels.push_back(std::move(l));
      continue;
    }
    std::vector<std::string> l;
    for (const Node& x : agent.Items()) {
      const std::string s = x.AsString();
      if (s.empty() || s.find(',') != std::string::npos) {
        x.Fail("labels must be nonempty and contain no comma");
      }
      l.push_back(s);
    }
    labels.push_back(std::move(l));
  }
  if (labels.empty()) node.Fail("needs at least one agent");
  try {
    return ProfileSpace(std::move(labels));
  } catch (const InputError& e) {
    node.Fail(e.what());
  }
}

NormalFormGame ParsePayoffs(const Node& node, const ActionSpace& actions) {
  const int n = actions.NumAgents();
  std::vector<std::vector<Rational>> payoffs(n);
  for (const Node& cell : ProfileTable(node, actions, "payoff cell")) {
    if (cell.Size() != static_cast<std::size_t>(n)) {
      cell.Fail("expected " + std::to_string(n) + " payoffs");
    }
    for (int i = 0; i < n; ++i) payoffs[i].push_back(cell.At(i).AsRational());
  }
  return NormalFormGame(actions, std::move(payoffs));
}

NormalFormGame ParseGameObject(const Node& node, const ActionSpace& actions) {
  node.OnlyFields({"payoffs"});
  return ParsePayoffs(node.At("payoffs"), actions);
}

std::vector<TypeSpace> ParseTypeSpaces(const std::optional<Node>& node,
                                       int agents, int dimension) {
  if (!node) return {};
  if (node->Size() != static_cast<std::size_t>(agents)) {
    node->Fail("expected one type space per agent");
  }
  std::vector<TypeSpace> out;
  for (const Node& space : node->Items()) {
    if (space.Value().is_string()) {
      if (space.AsString() != "simplex") space.Fail("expected \"simplex\" or a list");
      out.push_back(TypeSpace::FullSimplex());
      continue;
    }
    std::vector<SimplexPoint> points;
    std::vector<std::vector<Rational>> raw;
    for (const Node& p : space.Items()) {
      std::vector<Rational> v = p.AsRationalVector();
      if (static_cast<int>(v.size()) != dimension) {
        p.Fail("type vector needs " + std::to_string(dimension) + " entries");
      }
      try {
        points.push_back(NormalizeType(v));
      } catch (const InputError& e) {
        p.Fail(e.what());
      }
      raw.push_back(std::move(v));
    }
    if (points.empty()) space.Fail("type list is empty");
    out.push_back(TypeSpace::Finite(std::move(points), std::move(raw)));
  }
  return out;
}

std::vector<std::vector<RawType>> ParseRawTypes(const std::optional<Node>& node,
                                                int agents, int dimension) {
  std::vector<std::vector<RawType>> out;
  for (const TypeSpace& s : ParseTypeSpaces(node, agents, dimension)) {
    out.push_back(s.full_simplex ? std::vector<RawType>{} : s.raw);
  }
  return out;
}

int Dimension(const Node& node) { return node.AsPositiveInt(); }

template <typename F>
auto Wrap(const Node& node, F&& build) {
  try {
    return build();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind("$", 0) == 0) throw;
    node.Fail(msg);
  }
}

GameDocument ParseDocument(const Node& root) {
  root.ExpectObject();
  const std::string kind = root.At("kind").AsString();
  if (kind == "normal_form") {
    root.OnlyFields({"kind", "actions", "payoffs"});
    const ActionSpace actions = ParseSpace(root.At("actions"));
    return ParsePayoffs(root.At("payoffs"), actions);
  }
  if (kind == "multi_game") {
    root.OnlyFields({"kind", "actions", "games", "types"});
    const ActionSpace actions = ParseSpace(root.At("actions"));
    std::vector<NormalFormGame> basic;
    const Node games = root.At("games");
    for (const Node& g : games.Items()) basic.push_back(ParseGameObject(g, actions));
    if (basic.empty()) games.Fail("needs at least one basic game");
    auto types = ParseTypeSpaces(root.Find("types"), actions.NumAgents(),
                                 static_cast<int>(basic.size()));
    return Wrap(root, [&] { return MultiGame(std::move(basic), std::move(types)); });
  }
  if (kind == "generalized_multi_game") {
    root.OnlyFields({"kind", "actions", "games", "types"});
    const ActionSpace actions = ParseSpace(root.At("actions"));
    const Node games = root.At("games");
    if (games.Size() != static_cast<std::size_t>(actions.NumAgents())) {
      games.Fail("expected one list of basic games per agent");
    }
    std::vector<std::vector<NormalFormGame>> basic;
    for (const Node& per_k : games.Items()) {
      std::vector<NormalFormGame> row;
      for (const Node& g : per_k.Items()) row.push_back(ParseGameObject(g, actions));
      if (row.empty() || (!basic.empty() && row.size() != basic[0].size())) {
        per_k.Fail("every agent needs the same nonzero number of basic games");
      }
      basic.push_back(std::move(row));
    }
    auto types = ParseTypeSpaces(root.Find("types"), actions.NumAgents(),
                                 static_cast<int>(basic[0].size()));
    return Wrap(root, [&] {
      return GeneralizedMultiGame(std::move(basic), std::move(types));
    });
  }
  if (kind == "bayesian_finite") {
    root.OnlyFields({"kind", "actions", "types", "local_games", "prior"});
    const ActionSpace actions = ParseSpace(root.At("actions"));
    const ProfileSpace types = ParseSpace(root.At("types"));
    if (types.NumAgents() != actions.NumAgents()) {
      root.At("types").Fail("expected one type list per agent");
    }
    std::vector<NormalFormGame> local;
    for (const Node& g : ProfileTable(root.At("local_games"), types, "local game")) {
      local.push_back(ParseGameObject(g, actions));
    }
    BayesianFile out{FiniteBayesianGame(types, std::move(local)), std::nullopt};
    if (auto prior = root.Find("prior")) {
      std::vector<Rational> joint;
      for (const Node& m : ProfileTable(*prior, types, "prior mass")) {
        joint.push_back(m.AsRational());
      }
      out.prior = Wrap(*prior, [&] { return Prior(types, std::move(joint)); });
    }
    return out;
  }
  if (kind == "type_linear") {
    root.OnlyFields({"kind", "actions", "dimension", "own_type", "coefficients", "types"});
    const ActionSpace actions = ParseSpace(root.At("actions"));
    const int m = Dimension(root.At("dimension"));
    const int n = actions.NumAgents();
    const bool own = root.Has("own_type") && root.At("own_type").AsBool();
    auto raw = ParseRawTypes(root.Find("types"), n, m);
    const std::vector<Node> cells =
        ProfileTable(root.At("coefficients"), actions, "coefficients");
    auto vec = [m](const Node& v) {
      std::vector<Rational> out = v.AsRationalVector();
      if (static_cast<int>(out.size()) != m) {
        v.Fail("coefficient vector needs " + std::to_string(m) + " entries");
      }
      return out;
    };
    auto per_agent = [n](const Node& v) {
      if (v.Size() != static_cast<std::size_t>(n)) {
        v.Fail("expected " + std::to_string(n) + " entries, one per agent");
      }
      return v.Items();
    };
    if (own) {
      std::vector<std::vector<std::vector<Rational>>> coeff(n);
      for (const Node& cell : cells) {
        auto items = per_agent(cell);
        for (int i = 0; i < n; ++i) coeff[i].push_back(vec(items[i]));
      }
      return Wrap(root, [&] {
        return OwnTypeLinearGame(actions, m, std::move(coeff), std::move(raw));
      });
    }
    std::vector<std::vector<std::vector<std::vector<Rational>>>> coeff(
        n, std::vector<std::vector<std::vector<Rational>>>(n));
    for (const Node& cell : cells) {
      auto items = per_agent(cell);
      for (int i = 0; i < n; ++i) {
        auto ks = per_agent(items[i]);
        for (int k = 0; k < n; ++k) coeff[i][k].push_back(vec(ks[k]));
      }
    }
    return Wrap(root, [&] {
      return TypeLinearGame(actions, m, std::move(coeff), std::move(raw));
    });
  }
  if (kind == "trust_dg") {
    root.OnlyFields({"kind", "sender_grid", "sender_type", "receiver_types", "receiver_step"});
    std::vector<Rational> grid = root.At("sender_grid").AsRationalVector();
    Rational theta1 = root.At("sender_type").AsRational();
    std::vector<Rational> theta2 = root.At("receiver_types").AsRationalVector();
    Rational step = root.Has("receiver_step") ? root.At("receiver_step").AsRational()
                                              : Rational(1);
    return Wrap(root, [&] {
      return TrustStageGame(std::move(grid), std::move(theta1), std::move(theta2),
                            std::move(step));
    });
  }
  if (kind == "pd_dg") {
    root.OnlyFields({"kind", "t", "r", "p", "s", "y", "z"});
    PdParams p{root.At("t").AsRational(), root.At("r").AsRational(),
               root.At("p").AsRational(), root.At("s").AsRational(),
               root.At("y").AsRational(), root.At("z").AsRational()};
    Wrap(root, [&] { return p.Build(); });
    return p;
  }
  root.At("kind").Fail("unknown game kind \"" + kind + "\"");
}

ojson Labels(const ProfileSpace& space) {
  ojson out = ojson::array();
  for (int i = 0; i < space.NumAgents(); ++i) out.push_back(space.Labels(i));
  return out;
}

ojson RationalArray(const std::vector<Rational>& v) {
  ojson out = ojson::array();
  for (const Rational& x : v) out.push_back(x.ToString());
  return out;
}

ojson PayoffObject(const NormalFormGame& g) {
  ojson payoffs = ojson::object();
  const ActionSpace& a = g.Actions();
  for (std::size_t flat = 0; flat < a.NumProfiles(); ++flat) {
    payoffs[JoinLabels(a, a.Unflatten(flat))] = RationalArray(g.PurePayoff(a.Unflatten(flat)));
  }
  return {{"payoffs", payoffs}};
}

std::optional<ojson> TypeSpacesJson(const std::vector<const TypeSpace*>& spaces) {
  bool all_full = true;
  for (const TypeSpace* s : spaces) all_full = all_full && s->full_simplex;
  if (all_full) return std::nullopt;
  ojson out = ojson::array();
  for (const TypeSpace* s : spaces) {
    if (s->full_simplex) {
      out.push_back("simplex");
      continue;
    }
    ojson pts = ojson::array();
    if (!s->raw.empty()) {
      for (const auto& r : s->raw) pts.push_back(RationalArray(r));
    } else {
      for (const auto& p : s->points) pts.push_back(RationalArray(p.Coords()));
    }
    out.push_back(pts);
  }
  return out;
}

std::optional<ojson> RawTypesJson(const std::vector<std::vector<RawType>>& raw) {
  bool any = false;
  for (const auto& l : raw) any = any || !l.empty();
  if (!any) return std::nullopt;
  ojson out = ojson::array();
  for (const auto& l : raw) {
    if (l.empty()) {
      out.push_back("simplex");
      continue;
    }
    ojson pts = ojson::array();
    for (const auto& r : l) pts.push_back(RationalArray(r));
    out.push_back(pts);
  }
  return out;
}

struct Serializer {
  ojson operator()(const NormalFormGame& g) const {
    ojson out = {{"kind", "normal_form"}, {"actions", Labels(g.Actions())}};
    out["payoffs"] = PayoffObject(g)["payoffs"];
    return out;
  }
  ojson operator()(const MultiGame& g) const {
    ojson out = {{"kind", "multi_game"}, {"actions", Labels(g.Actions())}};
    ojson games = ojson::array();
    for (const NormalFormGame& b : g.BasicGames()) games.push_back(PayoffObject(b));
    out["games"] = games;
    std::vector<const TypeSpace*> spaces;
    for (int i = 0; i < g.NumAgents(); ++i) spaces.push_back(&g.Types(i));
    if (auto t = TypeSpacesJson(spaces)) out["types"] = *t;
    return out;
  }
  ojson operator()(const GeneralizedMultiGame& g) const {
    ojson out = {{"kind", "generalized_multi_game"}, {"actions", Labels(g.Actions())}};
    ojson games = ojson::array();
    for (int k = 0; k < g.NumAgents(); ++k) {
      ojson row = ojson::array();
      for (int j = 0; j < g.Dimension(); ++j) row.push_back(PayoffObject(g.Basic(k, j)));
      games.push_back(row);
    }
    out["games"] = games;
    std::vector<const TypeSpace*> spaces;
    for (int i = 0; i < g.NumAgents(); ++i) spaces.push_back(&g.Types(i));
    if (auto t = TypeSpacesJson(spaces)) out["types"] = *t;
    return out;
  }
  ojson operator()(const BayesianFile& f) const {
    const FiniteBayesianGame& g = f.game;
    ojson out = {{"kind", "bayesian_finite"},
                 {"actions", Labels(g.Actions())},
                 {"types", Labels(g.Types())}};
    ojson local = ojson::object();
    ojson prior = ojson::object();
    for (std::size_t flat = 0; flat < g.Types().NumProfiles(); ++flat) {
      const std::string key = JoinLabels(g.Types(), g.Types().Unflatten(flat));
      local[key] = PayoffObject(g.LocalGame(flat));
      if (f.prior) prior[key] = f.prior->Mass(flat).ToString();
    }
    out["local_games"] = local;
    if (f.prior) out["prior"] = prior;
    return out;
  }
  ojson operator()(const TypeLinearGame& g) const {
    ojson out = {{"kind", "type_linear"},
                 {"actions", Labels(g.Actions())},
                 {"dimension", g.Dimension()},
                 {"own_type", false}};
    ojson coeff = ojson::object();
    const ActionSpace& a = g.Actions();
    for (std::size_t flat = 0; flat < a.NumProfiles(); ++flat) {
      ojson per_i = ojson::array();
      for (int i = 0; i < g.NumAgents(); ++i) {
        ojson per_k = ojson::array();
        for (int k = 0; k < g.NumAgents(); ++k) {
          per_k.push_back(RationalArray(g.Coefficient(i, k, flat)));
        }
        per_i.push_back(per_k);
      }
      coeff[JoinLabels(a, a.Unflatten(flat))] = per_i;
    }
    out["coefficients"] = coeff;
    if (auto t = RawTypesJson(g.RawTypes())) out["types"] = *t;
    return out;
  }
  ojson operator()(const OwnTypeLinearGame& g) const {
    ojson out = {{"kind", "type_linear"},
                 {"actions", Labels(g.Actions())},
                 {"dimension", g.Dimension()},
                 {"own_type", true}};
    ojson coeff = ojson::object();
    const ActionSpace& a = g.Actions();
    for (std::size_t flat = 0; flat < a.NumProfiles(); ++flat) {
      ojson per_i = ojson::array();
      for (int i = 0; i < g.NumAgents(); ++i) {
        per_i.push_back(RationalArray(g.Coefficient(i, flat)));
      }
      coeff[JoinLabels(a, a.Unflatten(flat))] = per_i;
    }
    out["coefficients"] = coeff;
    if (auto t = RawTypesJson(g.RawTypes())) out["types"] = *t;
    return out;
  }
  ojson operator()(const TrustStageGame& g) const {
    return {{"kind", "trust_dg"},
            {"sender_grid", RationalArray(g.SenderActions())},
            {"sender_type", g.SenderType().ToString()},
            {"receiver_types", RationalArray(g.ReceiverTypes())},
            {"receiver_step", g.ReceiverStep().ToString()}};
  }
  ojson operator()(const PdParams& p) const {
    return {{"kind", "pd_dg"},         {"t", p.t.ToString()}, {"r", p.r.ToString()},
            {"p", p.p.ToString()},     {"s", p.s.ToString()}, {"y", p.y.ToString()},
            {"z", p.z.ToString()}};
  }
};

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann's message already carries "line L, column C".
    std::string msg = e.what();
    const auto pos = msg.find("] ");
    throw InputError("syntax error: " +
                     (pos == std::string::npos ? msg : msg.substr(pos + 2)));
  }
}

}  // namespace

std::string KindName(const GameDocument& doc) {
  static const char* kNames[] = {"normal_form",     "multi_game",  "generalized_multi_game",
                                 "bayesian_finite", "type_linear", "type_linear",
                                 "trust_dg",        "pd_dg"};
  return kNames[doc.index()];
}

GameDocument ParseGameDocument(std::string_view text) {
  const json root = ParseJson(text);
  return ParseDocument(Node(root, "$"));
}

nlohmann::ordered_json SerializeGameDocument(const GameDocument& doc) {
  return std::visit(Serializer{}, doc);
}

StrategyMapProfile ParseStrategyFile(std::string_view text,
                                     const FiniteBayesianGame& game) {
  const json root_json = ParseJson(text);
  const Node root(root_json, "$");
  root.OnlyFields({"kind", "maps"});
  if (root.Has("kind") && root.At("kind").AsString() != "strategy_map") {
    root.At("kind").Fail("expected \"strategy_map\"");
  }
  const Node maps = root.At("maps");
  if (maps.Size() != static_cast<std::size_t>(game.NumAgents())) {
    maps.Fail("expected one strategy map per agent");
  }
  StrategyMapProfile out;
  for (int i = 0; i < game.NumAgents(); ++i) {
    const Node m = maps.At(i);
    m.ExpectObject();
    const int actions = game.Actions().Count(i);
    StrategyMap map;
    for (const std::string& label : game.Types().Labels(i)) {
      if (!m.Has(label)) m.Fail("strategy map is missing type \"" + label + "\"");
      const Node s = m.At(label);
      if (s.Value().is_string()) {
        const std::string a = s.AsString();
        int idx = -1;
        try {
          idx = game.Actions().IndexOf(i, a);
        } catch (const InputError&) {
          s.Fail("unknown action \"" + a + "\"");
        }
        map.push_back(MixedStrategy::Pure(actions, idx));
        continue;
      }
      std::vector<Rational> probs = s.AsRationalVector();
      if (static_cast<int>(probs.size()) != actions) {
        s.Fail("expected " + std::to_string(actions) + " probabilities");
      }
      try {
        map.push_back(MixedStrategy(std::move(probs)));
      } catch (const InputError& e) {
        s.Fail(e.what());
      }
    }
    if (m.Value().size() != map.size()) m.Fail("strategy map names an unknown type");
    out.push_back(std::move(map));
  }
  return out;
}

nlohmann::ordered_json SerializeStrategyMaps(const FiniteBayesianGame& game,
                                             const StrategyMapProfile& maps) {
  ojson out = {{"kind", "strategy_map"}, {"maps", ojson::array()}};
  for (int i = 0; i < game.NumAgents(); ++i) {
    ojson m = ojson::object();
    for (int t = 0; t < game.Types().Count(i); ++t) {
      m[game.Types().Label(i, t)] = RationalArray(maps.at(i).at(t).Probs());
    }
    out["maps"].push_back(m);
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace typereg
