// Copyright 2026 The AuctionLab Authors
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

#include "auctionlab/scenario.h"

#include <fstream>
#include <sstream>

namespace auctionlab {

namespace {

std::string Trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> Tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int ParseInt(const std::string& s) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ScenarioError("expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw ScenarioError("expected an integer, got '" + s + "'");
  return v;
}

uint64_t ParseU64(const std::string& s) {
  size_t pos = 0;
  uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ScenarioError("expected an unsigned integer, got '" + s + "'");
  }
  if (pos != s.size() || s.front() == '-') {
    throw ScenarioError("expected an unsigned integer, got '" + s + "'");
  }
  return v;
}

bool ParseBool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ScenarioError("expected true or false, got '" + s + "'");
}

std::vector<int> ParseInts(const std::string& s) {
  std::vector<int> out;
  for (const auto& t : Tokens(s)) out.push_back(ParseInt(t));
  return out;
}

std::vector<Rational> ParseRationals(const std::vector<std::string>& tokens,
                                     size_t from) {
  std::vector<Rational> out;
  for (size_t k = from; k < tokens.size(); ++k) out.push_back(ParseRational(tokens[k]));
  return out;
}

ItemSet ParseItems(const std::string& s) {
  if (Trim(s) == "-") return ItemSet();
  std::vector<int> items = ParseInts(s);
  for (int j : items) {
    if (j < 0 || j >= kMaxItems) throw ScenarioError("item index out of range");
  }
  return ItemSet::FromItems(items);
}

std::string JoinInts(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string JoinItems(ItemSet s) {
  if (s.empty()) return "-";
  return JoinInts(s.Members());
}

}  // namespace

Valuation ParseValuation(const std::string& text) {
  auto t = Tokens(text);
  if (t.empty()) throw ScenarioError("empty valuation");
  const std::string& kind = t[0];
  if (kind == "unit_demand") return Valuation::UnitDemand(ParseRationals(t, 1));
  if (kind == "additive") return Valuation::Additive(ParseRationals(t, 1));
  if (kind == "concave") return Valuation::ConcaveSymmetric(ParseRationals(t, 1));
  if (kind == "table" || kind == "subadditive_table") {
    if (t.size() < 2) throw ScenarioError("table valuation needs m");
    return Valuation::ExplicitTable(ParseInt(t[1]), ParseRationals(t, 2),
                                    kind == "subadditive_table");
  }
  if (kind == "homogeneous") {
    if (t.size() < 3) throw ScenarioError("homogeneous valuation needs m and per-unit value");
    std::vector<int> items;
    for (size_t k = 3; k < t.size(); ++k) items.push_back(ParseInt(t[k]));
    return Valuation::ConstraintHomogeneous(ParseInt(t[1]), ItemSet::FromItems(items),
                                            ParseRational(t[2]));
  }
  if (kind == "xos") {
    if (t.size() < 2) throw ScenarioError("xos valuation needs m");
    std::vector<std::vector<Rational>> clauses;
    for (size_t k = 2; k < t.size(); ++k) {
      if (t[k] == "|") {
        clauses.emplace_back();
      } else {
        if (clauses.empty()) throw ScenarioError("xos clause must start with '|'");
        clauses.back().push_back(ParseRational(t[k]));
      }
    }
    return Valuation::Xos(ParseInt(t[1]), std::move(clauses));
  }
  throw ScenarioError("unknown valuation kind '" + kind + "'");
}

PlanPtr ParsePlan(const std::string& text, const Valuation& v) {
  auto t = Tokens(text);
  if (t.empty()) throw ScenarioError("empty plan");
  if ((t[0] == "truthful" || t[0] == "truthful_marginal") && t.size() == 1) {
    return TruthfulMarginalPlan(v);
  }
  if (t[0] == "drop_out" && t.size() == 1) return DropOutPlan();
  if (t[0] == "constant") {
    if (t.size() < 3) throw ScenarioError("constant plan needs a bid and a rule");
    std::vector<int> prefs;
    for (size_t k = 3; k < t.size(); ++k) prefs.push_back(ParseInt(t[k]));
    return ConstantBidPlan(ParseBid(t[1]), ParseRule(t[2]), v, std::move(prefs));
  }
  if (t[0] == "schedule") {
    if (t.size() < 3) throw ScenarioError("schedule plan needs bids and a rule");
    std::vector<Bid> bids;
    for (size_t k = 1; k + 1 < t.size(); ++k) bids.push_back(ParseBid(t[k]));
    return RoundSchedulePlan(std::move(bids), ParseRule(t.back()), v);
  }
  throw ScenarioError("unknown plan '" + text + "'");
}

Approximator ParseApproximator(const std::string& name) {
  if (name == "concave_symmetric") return Approximator::kConcaveSymmetric;
  if (name == "additive") return Approximator::kAdditive;
  if (name == "xos") return Approximator::kXos;
  if (name == "subadditive") return Approximator::kSubadditive;
  throw ScenarioError("unknown approximator '" + name + "'");
}

void Scenario::Validate() const {
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  }
  const int n = config.num_bidders;
  if (n <= 0) throw ScenarioError("mechanism needs at least one bidder");
  if (config.num_items <= 0 || config.num_items > kMaxItems) {
    throw ScenarioError("item count out of range");
  }
  if (static_cast<int>(valuations.size()) != n) {
    throw ScenarioError("expected " + std::to_string(n) + " valuations, found " +
                        std::to_string(valuations.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (valuations[i].num_items() != config.num_items) {
      throw ScenarioError("valuation " + std::to_string(i) + " has " +
                          std::to_string(valuations[i].num_items()) +
                          " items, mechanism has " + std::to_string(config.num_items));
    }
  }
  if (!plans.profile.empty() && static_cast<int>(plans.profile.size()) != n) {
    throw ScenarioError("profile needs one plan per bidder");
  }
  for (const auto& p : plans.profile) {
    if (p.empty()) throw ScenarioError("profile is missing a plan");
  }
  for (const auto& [key, k] : plans.pinned_supporters) {
    if (k < 0 || k >= n) throw ScenarioError("pinned supporter out of range at " + key);
  }
  if (plans.rules.empty()) throw ScenarioError("no selection rules");
  if (experiment.target && !experiment.target->FitsIn(config.num_items)) {
    throw ScenarioError("approx target outside the items");
  }
}

Scenario ParseScenario(const std::string& text, const std::string& origin) {
  Scenario s;
  std::string kind = "draft";
  int bidders = -1;
  int items = -1;
  std::vector<int> order, tie_break;
  std::map<int, Valuation> vals;
  std::map<int, std::string> profile;
  bool seen_mechanism = false;

  std::istringstream in(text);
  std::string raw, section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    try {
      std::string line = raw;
      if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = Trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ScenarioError("unterminated section header");
        section = Trim(line.substr(1, line.size() - 2));
        if (section != "mechanism" && section != "valuations" && section != "plans" &&
            section != "experiment") {
          throw ScenarioError("unknown section [" + section + "]");
        }
        if (section == "mechanism") seen_mechanism = true;
        continue;
      }
      size_t eq = line.find('=');
      if (eq == std::string::npos) throw ScenarioError("expected 'key = value'");
      std::string key = Trim(line.substr(0, eq));
      std::string value = Trim(line.substr(eq + 1));
      if (section.empty()) throw ScenarioError("key outside any section");

      if (section == "mechanism") {
        if (key == "kind") kind = value;
        else if (key == "bidders") bidders = ParseInt(value);
        else if (key == "items") items = ParseInt(value);
        else if (key == "order") order = ParseInts(value);
        else if (key == "tie_break") tie_break = ParseInts(value);
        else throw ScenarioError("unknown mechanism field '" + key + "'");
      } else if (section == "valuations") {
        int i = ParseInt(key);
        if (vals.count(i)) throw ScenarioError("duplicate valuation " + key);
        vals.emplace(i, ParseValuation(value));
      } else if (section == "plans") {
        if (key == "grid") s.plans.grid = BidGrid::Parse(value);
        else if (key == "deviation_grid") s.plans.deviation_grid = BidGrid::Parse(value);
        else if (key == "rules") {
          s.plans.rules.clear();
          for (const auto& r : Tokens(value)) s.plans.rules.push_back(ParseRule(r));
        } else if (key == "undominated") s.plans.undominated = ParseBool(value);
        else if (key.rfind("profile.", 0) == 0) profile[ParseInt(key.substr(8))] = value;
        else if (key == "pin") {
          auto t = Tokens(value);
          if (t.size() != 2) throw ScenarioError("pin expects '<state> <bidder>'");
          s.plans.pinned_supporters[t[0]] = ParseInt(t[1]);
        } else throw ScenarioError("unknown plans field '" + key + "'");
      } else {
        Experiment& x = s.experiment;
        if (key == "directive") x.directive = value;
        else if (key == "seed") x.seed = ParseU64(value);
        else if (key == "lambda") x.lambda = ParseRational(value);
        else if (key == "mu") x.mu = ParseRational(value);
        else if (key == "family") x.family = value;
        else if (key == "approximator") x.approximator = value;
        else if (key == "target") x.target = ParseItems(value);
        else if (key == "name") x.name = value;
        else if (key.rfind("param.", 0) == 0) x.params[key.substr(6)] = value;
        else throw ScenarioError("unknown experiment field '" + key + "'");
      }
    } catch (const std::exception& e) {
      throw ScenarioError(origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }

  try {
    if (!seen_mechanism) throw ScenarioError("missing [mechanism] section");
    if (bidders < 0 || items < 0) throw ScenarioError("mechanism needs bidders and items");
    if (items > kMaxItems) throw ScenarioError("too many items");
    s.config = MechanismConfig::Make(ParseMechanism(kind), bidders, items);
    if (!order.empty()) s.config.item_order = order;
    if (!tie_break.empty()) s.config.tie_break = tie_break;
    for (int i = 0; i < bidders; ++i) {
      auto it = vals.find(i);
      if (it == vals.end()) throw ScenarioError("missing valuation for bidder " + std::to_string(i));
      s.valuations.push_back(it->second);
    }
    if (static_cast<int>(vals.size()) != bidders) {
      throw ScenarioError("valuations listed for bidders that do not exist");
    }
    if (!profile.empty()) {
      s.plans.profile.assign(bidders, "");
      for (const auto& [i, p] : profile) {
        if (i < 0 || i >= bidders) throw ScenarioError("profile entry for unknown bidder");
        s.plans.profile[i] = p;
      }
    }
    s.Validate();
    for (int i = 0; i < static_cast<int>(s.plans.profile.size()); ++i) {
      ParsePlan(s.plans.profile[i], s.valuations[i]);
    }
  } catch (const std::exception& e) {
    throw ScenarioError(origin + ": " + e.what());
  }
  return s;
}

Scenario LoadScenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ScenarioError(path + ": cannot open");
  std::stringstream buf;
  buf << f.rdbuf();
  return ParseScenario(buf.str(), path);
}

std::string SerializeScenario(const Scenario& s) {
  std::ostringstream os;
  os << "[mechanism]\n"
     << "kind = " << MechanismName(s.config.kind) << '\n'
     << "bidders = " << s.config.num_bidders << '\n'
     << "items = " << s.config.num_items << '\n';
  if (s.config.kind == MechanismKind::kSequentialItem) {
    os << "order = " << JoinInts(s.config.item_order) << '\n';
  }
  os << "tie_break = " << JoinInts(s.config.tie_break) << "\n\n[valuations]\n";
  for (size_t i = 0; i < s.valuations.size(); ++i) {
    os << i << " = " << s.valuations[i].ToString() << '\n';
  }
  os << "\n[plans]\n";
  if (s.plans.grid) os << "grid = " << s.plans.grid->ToString() << '\n';
  if (s.plans.deviation_grid) {
    os << "deviation_grid = " << s.plans.deviation_grid->ToString() << '\n';
  }
  os << "rules =";
  for (auto r : s.plans.rules) os << ' ' << RuleName(r);
  os << "\nundominated = " << (s.plans.undominated ? "true" : "false") << '\n';
  for (size_t i = 0; i < s.plans.profile.size(); ++i) {
    os << "profile." << i << " = " << s.plans.profile[i] << '\n';
  }
  for (const auto& [key, k] : s.plans.pinned_supporters) {
    os << "pin = " << key << ' ' << k << '\n';
  }
  const Experiment& x = s.experiment;
  os << "\n[experiment]\n"
     << "directive = " << x.directive << '\n'
     << "seed = " << x.seed << '\n'
     << "lambda = " << ToString(x.lambda) << '\n'
     << "mu = " << ToString(x.mu) << '\n'
     << "family = " << x.family << '\n'
     << "approximator = " << x.approximator << '\n';
  if (x.target) os << "target = " << JoinItems(*x.target) << '\n';
  if (!x.name.empty()) os << "name = " << x.name << '\n';
  for (const auto& [k, v] : x.params) os << "param." << k << " = " << v << '\n';
  return os.str();
}

GameInstance BuildInstance(const Scenario& s) {
  if (!s.plans.grid) throw ScenarioError("scenario has no bid grid");
  const BidGrid& deviation = s.plans.deviation_grid ? *s.plans.deviation_grid : *s.plans.grid;
  return MakeGridInstance(s.config, s.valuations, *s.plans.grid, deviation,
                          s.plans.rules, s.plans.undominated);
}

Profile BuildProfile(const Scenario& s) {
  if (s.plans.profile.empty()) throw ScenarioError("scenario has no explicit profile");
  Profile p;
  for (size_t i = 0; i < s.plans.profile.size(); ++i) {
    p.push_back(ParsePlan(s.plans.profile[i], s.valuations[i]));
  }
  return p;
}

}  // namespace auctionlab
