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

#include "auctionlab/corpus.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>

#include "auctionlab/correlated.h"
#include "auctionlab/engine.h"
#include "auctionlab/grid.h"
#include "auctionlab/nash.h"
#include "auctionlab/spe.h"
#include "auctionlab/sweep.h"

#ifndef AUCTIONLAB_SCENARIO_DIR
#define AUCTIONLAB_SCENARIO_DIR "scenarios"
#endif

namespace auctionlab {
namespace {

std::string Str(const Rational& r) { return ToString(r); }
std::string Str(bool b) { return b ? "true" : "false"; }

Rational Param(const Scenario& s, const std::string& key, const Rational& fallback) {
  auto it = s.experiment.params.find(key);
  return it == s.experiment.params.end() ? fallback : ParseRational(it->second);
}

int IntParam(const Scenario& s, const std::string& key, int fallback) {
  auto it = s.experiment.params.find(key);
  return it == s.experiment.params.end() ? fallback : std::stoi(it->second);
}

SpeOptions SpeOptionsFor(const Scenario& s) {
  if (!s.plans.grid) throw std::invalid_argument("scenario has no bid grid");
  SpeOptions o;
  o.grid = *s.plans.grid;
  o.pinned_supporters = s.plans.pinned_supporters;
  o.undominated = s.plans.undominated;
  return o;
}

GameInstance WithKind(GameInstance instance, MechanismKind kind) {
  instance.config.kind = kind;
  instance.config.item_order.clear();
  instance.Validate();
  return instance;
}

int WinnerOf(const Outcome& o, int item) {
  for (int i = 0; i < o.num_bidders(); ++i) {
    if (o.allocation.bundles[i].contains(item)) return i;
  }
  return -1;
}

std::string PathString(const std::vector<SpeStage>& path) {
  std::ostringstream os;
  for (size_t k = 0; k < path.size(); ++k) {
    const SpeStage& st = path[k];
    if (k) os << "; ";
    if (st.winner < 0) {
      os << "nobody";
      continue;
    }
    os << st.winner << " wins " << st.pick.ToString() << " at " << st.price.ToString();
    if (st.supporter >= 0) os << " (supporter " << st.supporter << ")";
  }
  return os.str();
}

Rational Abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

bool ReproduceReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return !checks.empty();
}

void ReproduceReport::Add(std::string what, std::string expected, std::string measured,
                          bool pass) {
  checks.push_back({std::move(what), std::move(expected), std::move(measured), pass});
}

std::string ReproduceReport::ToString() const {
  std::ostringstream os;
  os << "reproduce " << name << '\n';
  for (const auto& c : checks) {
    os << "  [" << (c.ok ? "ok" : "MISMATCH") << "] " << c.what << ": expected "
       << c.expected << ", measured " << c.measured << '\n';
  }
  os << "  " << (ok() ? "all checks match" : "FAILED") << " (" << seconds << " s)\n";
  return os.str();
}

std::vector<std::string> CorpusNames() {
  return {"intro_3_2", "lower_209_171", "stability_reconstructed", "non_unique",
          "unit_demand_poa2"};
}

std::string DefaultScenarioDir() {
  if (const char* env = std::getenv("AUCTIONLAB_SCENARIO_DIR"); env && *env) return env;
  return AUCTIONLAB_SCENARIO_DIR;
}

ReproduceReport Reproduce(const std::string& name, const std::string& scenario_dir) {
  using Pipeline = ReproduceReport (*)(const Scenario&);
  Pipeline run = nullptr;
  if (name == "lower_209_171") run = &ReproduceLower;
  else if (name == "intro_3_2") run = &ReproduceIntro;
  else if (name == "stability_reconstructed") run = &ReproduceStability;
  else if (name == "non_unique") run = &ReproduceNonUnique;
  else if (name == "unit_demand_poa2") run = &ReproduceUnitDemandPoa2;
  else throw std::invalid_argument("unknown corpus entry '" + name + "'");

  auto start = std::chrono::steady_clock::now();
  Scenario s = LoadScenario((std::filesystem::path(scenario_dir) / (name + ".scn")).string());
  ReproduceReport report = run(s);
  report.name = name;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ReproduceReport ReproduceLower(const Scenario& s) {
  ReproduceReport r;
  r.name = "lower_209_171";
  const Rational opt = OptimalWelfare(s.valuations).welfare;
  r.Add("optimal welfare", "209", Str(opt), opt == 209);

  SpeResult spe = SolveSpe(s.config, s.valuations, SpeOptionsFor(s));
  r.Add("subgame perfect path found", "true", Str(spe.solved), spe.solved);
  if (!spe.solved) {
    r.Add("solver note", "-", spe.report.note, false);
    return r;
  }
  const EquilibriumEntry& eq = spe.report.equilibria.front();
  r.Add("equilibrium path", "B wins at 51 supported by A, A and C at 0", PathString(spe.path),
        spe.path.front().winner == 1 && spe.path.front().supporter == 0 &&
            spe.path.front().price.amount == 51);
  r.Add("equilibrium welfare", "171", Str(eq.welfare), eq.welfare == 171);
  r.Add("equilibrium revenue", "51", Str(eq.revenue), eq.revenue == 51);
  const Rational ratio = opt / eq.welfare;
  r.Add("ratio OPT/SW", "209/171 = 11/9", Str(ratio), ratio == Fraction(209, 171));

  NashOptions nash;
  nash.undominated = s.plans.undominated;
  GameInstance instance = BuildInstance(s);
  NashResult sid = IsPureNash(instance, spe.plans, nash);
  r.Add("pure Nash, single-item draft", "true",
        sid.is_nash ? "true" : sid.witness->ToString(), sid.is_nash);
  NashResult draft = IsPureNash(WithKind(instance, MechanismKind::kDraft), spe.plans, nash);
  r.Add("pure Nash, draft", "true", draft.is_nash ? "true" : draft.witness->ToString(),
        draft.is_nash);

  // The other two choices of round-1 supporter.
  const std::string root = SpeRootKey(s.config);
  SpeOptions by_c = SpeOptionsFor(s);
  by_c.pinned_supporters[root] = 2;
  SpeResult c = SolveSpe(s.config, s.valuations, by_c);
  bool b_first = c.solved && c.path.front().winner == 1;
  r.Add("C as round-1 supporter, B wins round 1", "false",
        c.solved ? PathString(c.path) : c.report.note, !b_first);
  SpeOptions by_b = SpeOptionsFor(s);
  by_b.pinned_supporters[root] = 1;
  SpeResult b = SolveSpe(s.config, s.valuations, by_b);
  Rational bw = b.solved ? b.report.equilibria.front().welfare : Rational(0);
  r.Add("B as round-1 supporter, welfare", "209 (efficient)",
        b.solved ? Str(bw) + " via " + PathString(b.path) : b.report.note, b.solved && bw == opt);
  return r;
}

Scenario IntroScenario(const Rational& alpha, const Rational& eps) {
  Scenario s;
  s.config = MechanismConfig::Make(MechanismKind::kSequentialItem, 4, 3);
  s.config.item_order = {0, 2, 1};
  s.config.tie_break = {0, 1, 2, 3};
  s.valuations = {Valuation::UnitDemand({eps, 0, 0}),
                  Valuation::UnitDemand({alpha, alpha, 0}),
                  Valuation::UnitDemand({0, alpha, alpha}),
                  Valuation::UnitDemand({0, 0, Rational(alpha - eps)})};
  s.plans.grid = BidGrid::Uniform(eps, alpha, true, false);
  s.plans.undominated = true;
  const std::string eps_plus = Bid{eps, true}.ToString();
  s.plans.profile = {"constant 0 best_item_always", "constant " + eps_plus + " best_item",
                     "constant " + eps_plus + " best_item", "constant " + eps_plus + " best_item"};
  s.experiment.directive = "reproduce";
  s.experiment.name = "intro_3_2";
  s.experiment.params["alpha"] = ToString(alpha);
  s.experiment.params["epsilon"] = ToString(eps);
  s.Validate();
  return s;
}

namespace {

struct IntroMeasure {
  Rational ratio;
  Rational slack;
};

IntroMeasure IntroChecks(const Scenario& s, ReproduceReport& r) {
  const Rational alpha = Param(s, "alpha", 1);
  const Rational eps = Param(s, "epsilon", Rational(1, 100));
  const std::string tag = " [eps=" + Str(eps) + "]";
  const int n = s.config.num_bidders;

  const Rational opt = OptimalWelfare(s.valuations).welfare;
  r.Add("optimal welfare" + tag, "3a-e = " + Str(Rational(3 * alpha - eps)), Str(opt),
        opt == 3 * alpha - eps);

  SpeResult seq = SolveSpe(s.config, s.valuations, SpeOptionsFor(s));
  Rational seq_w = seq.solved ? seq.report.equilibria.front().welfare : Rational(0);
  r.Add("sequential equilibrium welfare" + tag, "2a+e = " + Str(Rational(2 * alpha + eps)),
        seq.solved ? Str(seq_w) + " via " + PathString(seq.path) : seq.report.note,
        seq.solved && seq_w == 2 * alpha + eps);

  GameInstance draft = WithKind(BuildInstance(s), MechanismKind::kDraft);
  Profile profile = BuildProfile(s);
  Outcome out = RunAuction(draft.config, profile);
  Rational draft_w = OutcomeWelfare(out, s.valuations);
  r.Add("draft profile welfare" + tag, "3a-e = " + Str(Rational(3 * alpha - eps)), Str(draft_w),
        draft_w == 3 * alpha - eps);
  NashOptions nash;
  nash.undominated = s.plans.undominated;
  NashResult ne = IsPureNash(draft, profile, nash);
  r.Add("draft profile is pure Nash" + tag, "true",
        ne.is_nash ? "true" : ne.witness->ToString(), ne.is_nash);

  IntroMeasure m;
  if (seq_w > 0) {
    m.ratio = opt / seq_w;
    m.slack = 2 * n * eps / seq_w;
  }
  Rational gap = Abs(Rational(m.ratio - Rational(3, 2)));
  r.Add("ratio OPT/SW within grid slack of 3/2" + tag, "|ratio-3/2| <= " + Str(m.slack),
        Str(m.ratio) + " (gap " + Str(gap) + ")", seq_w > 0 && gap <= m.slack);
  return m;
}

}  // namespace

ReproduceReport ReproduceIntro(const Scenario& s) {
  ReproduceReport r;
  r.name = "intro_3_2";
  IntroMeasure base = IntroChecks(s, r);
  const Rational alpha = Param(s, "alpha", 1);
  const Rational eps = Param(s, "epsilon", Rational(1, 100));
  auto it = s.experiment.params.find("compare_epsilon");
  if (it != s.experiment.params.end()) {
    Rational other = ParseRational(it->second);
    IntroMeasure m = IntroChecks(IntroScenario(alpha, other), r);
    const Rational& small = other < eps ? m.ratio : base.ratio;
    const Rational& large = other < eps ? base.ratio : m.ratio;
    Rational gs = Abs(Rational(small - Rational(3, 2)));
    Rational gl = Abs(Rational(large - Rational(3, 2)));
    r.Add("ratio approaches 3/2 as eps shrinks", "gap(smaller eps) < gap(larger eps)",
          Str(gs) + " < " + Str(gl), gs < gl);
  }
  return r;
}

ReproduceReport ReproduceStability(const Scenario& s) {
  ReproduceReport r;
  r.name = "stability_reconstructed";
  const Rational eps = Param(s, "epsilon", Rational(1, 10));
  const Rational opt = OptimalWelfare(s.valuations).welfare;
  r.Add("optimal welfare", "3+e = " + Str(Rational(3 + eps)), Str(opt), opt == 3 + eps);

  SpeResult spe = SolveSpe(s.config, s.valuations, SpeOptionsFor(s));
  r.Add("subgame perfect path found", "true", Str(spe.solved), spe.solved);
  if (!spe.solved) {
    r.Add("solver note", "-", spe.report.note, false);
    return r;
  }
  const Rational w = spe.report.equilibria.front().welfare;
  r.Add("a loses round 1", "true", PathString(spe.path), spe.path.front().winner != 0);
  r.Add("equilibrium welfare below OPT", "< " + Str(opt), Str(w), w < opt);
  const Rational ratio = opt / w;
  r.Add("ratio OPT/SW", "> 1", Str(ratio), ratio > 1);

  NashOptions nash;
  nash.undominated = s.plans.undominated;
  NashResult ne = IsPureNash(BuildInstance(s), spe.plans, nash);
  r.Add("path plans are pure Nash", "true", ne.is_nash ? "true" : ne.witness->ToString(),
        ne.is_nash);
  return r;
}

ReproduceReport ReproduceNonUnique(const Scenario& s) {
  ReproduceReport r;
  r.name = "non_unique";
  GameInstance instance = BuildInstance(s);
  const Rational opt = OptimalWelfare(s.valuations).welfare;
  r.Add("optimal welfare", "4", Str(opt), opt == 4);

  // Equilibria of the paper's shape: b or c takes item 0 at 1, the other
  // takes item 1 at 0.
  auto shaped = [](const Outcome& o) {
    int w0 = WinnerOf(o, 0), w1 = WinnerOf(o, 1);
    return (w0 == 1 || w0 == 2) && (w1 == 1 || w1 == 2) && w0 != w1 &&
           o.payments[w0] == 1 && o.payments[w1] == 0;
  };

  std::set<int> winners, enumerated;
  std::vector<Profile> examples(3);
  EquilibriumReport eqs = EnumeratePureNash(instance);
  for (const auto& e : eqs.equilibria) {
    if (!shaped(e.outcome)) continue;
    int w = WinnerOf(e.outcome, 0);
    if (!winners.count(w)) examples[w] = e.profile;
    winners.insert(w);
    enumerated.insert(w);
  }

  // A contingent profile for the other assignment: a bids 1, b bids 1+,
  // and c threatens to bid 1 on the last item if a takes the first.
  const int first = winners.empty() ? -1 : *winners.begin();
  const int other = first == 1 ? 2 : 1;
  if (winners.size() < 2 && first > 0) {
    const Valuation& va = s.valuations[0];
    const Valuation& vo = s.valuations[other];
    const Valuation& vt = s.valuations[first];
    Profile p(3);
    p[0] = ConstantBidPlan({1, false}, SelectionRule::kBestItem, va);
    p[other] = ConstantBidPlan({1, true}, SelectionRule::kBestItem, vo);
    p[first] = LambdaPlan(
        [vt](const History& h, int self) {
          Bid bid{0, false};
          if (h.round() == 1 && h.announcements()[0].winner == 0) bid = {1, false};
          return Action{bid, SelectDemand(SelectionRule::kBestItem, vt, h.BundleOf(self), h,
                                          bid.amount)};
        },
        "0, then 1 on the last item if bidder 0 took the first");
    Outcome o = RunAuction(instance.config, p);
    NashResult ne = IsPureNash(instance, p);
    r.Add("contingent profile for bidder " + std::to_string(other) + " is pure Nash", "true",
          ne.is_nash ? "true" : ne.witness->ToString(), ne.is_nash && shaped(o));
    if (ne.is_nash && shaped(o)) {
      winners.insert(WinnerOf(o, 0));
      examples[other] = p;
    }
  }
  std::string ws;
  for (int w : winners) ws += (ws.empty() ? "" : ",") + std::to_string(w);
  r.Add("pure Nash winners of item 0 at price 1", "{1,2}", "{" + ws + "}",
        winners == std::set<int>{1, 2});

  // Mirrored tie order: the enumeration alone finds the other assignment.
  GameInstance mirrored = instance;
  std::swap(mirrored.config.tie_break[1], mirrored.config.tie_break[2]);
  std::set<int> mirrored_winners;
  for (const auto& e : EnumeratePureNash(mirrored).equilibria) {
    if (shaped(e.outcome)) mirrored_winners.insert(WinnerOf(e.outcome, 0));
  }
  std::string ew, mw;
  for (int w : enumerated) ew += (ew.empty() ? "" : ",") + std::to_string(w);
  for (int w : mirrored_winners) mw += (mw.empty() ? "" : ",") + std::to_string(w);
  std::set<int> all = enumerated;
  all.insert(mirrored_winners.begin(), mirrored_winners.end());
  r.Add("enumeration under both tie orders", "winners {1,2}",
        "{" + ew + "} and {" + mw + "}", all == std::set<int>{1, 2} && !mirrored_winners.empty());

  if (winners.size() == 2) {
    ProfileDistribution mix{{examples[1], Rational(1, 2)}, {examples[2], Rational(1, 2)}};
    CorrelatedCheck ce = VerifyCorrelatedEquilibrium(instance, mix);
    r.Add("even mix of the two is correlated", "true",
          ce.is_equilibrium ? "true" : ce.ToString(), ce.is_equilibrium);
  }

  // Item auction selling item 0 first: b or c can take it.
  SpeOptions so = SpeOptionsFor(s);
  so.pinned_supporters.clear();
  std::set<int> seq_winners;
  for (const std::vector<int>& tb : {std::vector<int>{1, 2, 0}, std::vector<int>{2, 1, 0}}) {
    SpeResult seq = SolveSpeSequential(s.valuations, {0, 1}, tb, so);
    if (seq.solved && seq.report.equilibria.front().welfare == opt) {
      seq_winners.insert(seq.path.front().winner);
    }
  }
  std::string sw;
  for (int w : seq_winners) sw += (sw.empty() ? "" : ",") + std::to_string(w);
  r.Add("efficient item-auction equilibria, item 0 first", "winners {1,2}", "{" + sw + "}",
        seq_winners == std::set<int>{1, 2});
  return r;
}

ReproduceReport ReproduceUnitDemandPoa2(const Scenario& s) {
  ReproduceReport r;
  r.name = "unit_demand_poa2";
  SweepOptions o;
  o.family = "unit_demand";
  o.n = IntParam(s, "n", s.config.num_bidders);
  o.m = IntParam(s, "m", s.config.num_items);
  o.vary_size = IntParam(s, "vary_size", 1) != 0;
  o.instances = IntParam(s, "instances", 20);
  o.den = IntParam(s, "den", 8);
  o.step = s.plans.grid ? s.plans.grid->Step() : Rational(1, 8);
  o.rules = s.plans.rules;
  o.kind = s.config.kind;
  o.seed = s.experiment.seed;
  o.smoothness = false;

  std::vector<SweepRow> rows = RunSweep(o);
  int with_eq = 0, violations = 0;
  Rational worst = 0;
  std::string first_bad;
  for (const auto& row : rows) {
    if (!row.equilibria) continue;
    ++with_eq;
    if (*row.min_welfare > 0) worst = std::max<Rational>(worst, row.opt / *row.min_welfare);
    if (row.opt > 2 * *row.min_welfare + 2 * row.n * o.step) {
      if (!violations++) first_bad = "instance " + std::to_string(row.instance);
    }
  }
  r.Add("instances with a pure Nash on the grid", "> 0",
        std::to_string(with_eq) + " of " + std::to_string(rows.size()), with_eq > 0);
  r.Add("OPT <= 2 SW + 2 n step for every equilibrium", "0 violations",
        std::to_string(violations) + (violations ? " (" + first_bad + ")" : ""),
        violations == 0);
  r.Add("largest observed OPT/SW", "<= 2 + slack",
        Str(worst) + " (" + std::to_string(ToDouble(worst)) + ")", true);
  return r;
}

}  // namespace auctionlab
