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

// auctionlab command-line driver.
//
//   auctionlab run|nash|spe|smoothness|approx --scenario <path>
//   auctionlab reproduce <name>|all
//   auctionlab sweep [--family ...] [--out rows.csv]
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "auctionlab/approx.h"
#include "auctionlab/corpus.h"
#include "auctionlab/engine.h"
#include "auctionlab/errors.h"
#include "auctionlab/nash.h"
#include "auctionlab/scenario.h"
#include "auctionlab/smoothness.h"
#include "auctionlab/spe.h"
#include "auctionlab/sweep.h"

namespace al = auctionlab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string scenario;
  std::string grid;
  std::optional<uint64_t> seed;
  std::string out;
  std::optional<uint64_t> cap;
};

void AddCommon(CLI::App* cmd, Common& c, bool need_scenario) {
  auto* s = cmd->add_option("--scenario", c.scenario, "scenario file");
  if (need_scenario) s->required();
  cmd->add_option("--grid", c.grid, "replace the bid grid by multiples of this step");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--out", c.out, "write CSV here");
  cmd->add_option("--cap", c.cap, "enumeration cap");
}

al::Scenario Load(const Common& c) {
  al::Scenario s = al::LoadScenario(c.scenario);
  if (!c.grid.empty()) {
    al::Rational step = al::ParseRational(c.grid);
    al::Rational max = 1;
    bool plus = false;
    if (s.plans.grid) {
      max = s.plans.grid->bids().back().amount;
      for (const auto& b : s.plans.grid->bids()) plus = plus || b.plus;
    }
    s.plans.grid = al::BidGrid::Uniform(step, max, plus);
    if (s.plans.deviation_grid) s.plans.deviation_grid = al::BidGrid::Uniform(step, max, true);
  }
  if (c.seed) s.experiment.seed = *c.seed;
  return s;
}

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

int Run(const Common& c) {
  al::Scenario s = Load(c);
  if (s.plans.profile.empty()) throw al::ScenarioError("scenario has no profile");
  al::Outcome o = al::RunAuction(s.config, al::BuildProfile(s), s.experiment.seed);
  std::cout << al::ExportTranscript(o);
  std::cout << "welfare " << al::ToString(al::OutcomeWelfare(o, s.valuations)) << "\nrevenue "
            << al::ToString(al::Revenue(o)) << "\nopt "
            << al::ToString(al::OptimalWelfare(s.valuations).welfare) << '\n';
  return kOk;
}

int Nash(const Common& c, bool undominated) {
  al::Scenario s = Load(c);
  al::GameInstance instance = al::BuildInstance(s);
  al::NashOptions options;
  options.undominated = undominated || s.plans.undominated;
  if (!s.plans.profile.empty()) {
    al::NashResult r = al::IsPureNash(instance, al::BuildProfile(s), options);
    if (r.is_nash) {
      std::cout << "pure Nash: yes\n";
      return kOk;
    }
    std::cout << "pure Nash: no\n" << r.witness->ToString() << '\n';
    return kFailed;
  }
  al::EquilibriumReport rep =
      al::EnumeratePureNash(instance, options, c.cap.value_or(al::kDefaultProfileCap));
  std::cout << rep.ToString() << '\n';
  WriteOut(c.out, rep.ToCsv());
  return kOk;
}

int Spe(const Common& c) {
  al::Scenario s = Load(c);
  if (!s.plans.grid) throw al::ScenarioError("scenario has no bid grid");
  al::SpeOptions o;
  o.grid = *s.plans.grid;
  o.pinned_supporters = s.plans.pinned_supporters;
  o.undominated = s.plans.undominated;
  if (c.cap) o.state_cap = *c.cap;
  al::SpeResult r = al::SolveSpe(s.config, s.valuations, o);
  std::cout << r.report.ToString() << '\n';
  if (!r.solved) return kFailed;
  for (size_t k = 0; k < r.path.size(); ++k) {
    const auto& st = r.path[k];
    std::cout << "round " << k << ": ";
    if (st.winner < 0) {
      std::cout << "nobody\n";
      continue;
    }
    std::cout << "bidder " << st.winner << " takes " << st.pick.ToString() << " at "
              << st.price.ToString() << ", supporter " << st.supporter << '\n';
  }
  std::cout << "states " << r.states << '\n';
  WriteOut(c.out, r.report.ToCsv());
  return kOk;
}

// A copy of `s` whose plans section replays `profile`.
al::Scenario Replay(const al::Scenario& s, const al::Profile& profile) {
  al::Scenario out = s;
  out.plans.profile.clear();
  for (const auto& p : profile) out.plans.profile.push_back(p->Describe());
  out.experiment.directive = "run";
  return out;
}

int Smoothness(const Common& c) {
  al::Scenario s = Load(c);
  al::GameInstance instance = al::BuildInstance(s);
  al::ProfileDomain domain;
  domain.seed = s.experiment.seed;
  if (c.cap) domain.exhaustive_cap = *c.cap;
  const std::string& family = s.experiment.family;
  al::SmoothnessCertificate cert;
  if (family == "unit_demand") {
    cert = al::CheckSmoothness(instance, al::UnitDemandFamily(), s.experiment.lambda,
                               s.experiment.mu, domain);
  } else if (family == "core") {
    cert = al::CheckSmoothness(instance, al::CoreFamily(), s.experiment.lambda, s.experiment.mu,
                               domain);
  } else if (family.rfind("via:", 0) == 0) {
    cert = al::CheckSmoothnessViaExtension(instance, al::ParseApproximator(family.substr(4)),
                                           s.experiment.lambda, s.experiment.mu, domain);
  } else {
    throw al::ScenarioError("unknown deviation family '" + family + "'");
  }
  std::cout << cert.ToString() << '\n'
            << "poa_bound " << al::ToString(al::PoaBound(cert.lambda, cert.mu)) << '\n';
  if (!cert.holds && cert.counterexample && !c.out.empty()) {
    try {
      WriteOut(c.out, al::SerializeScenario(Replay(s, *cert.counterexample)));
      std::cout << "counterexample written to " << c.out << '\n';
    } catch (const std::exception& e) {
      std::cerr << "counterexample not serializable: " << e.what() << '\n';
    }
  }
  return cert.holds ? kOk : kFailed;
}

int Approx(const Common& c) {
  al::Scenario s = Load(c);
  al::Approximator a = al::ParseApproximator(s.experiment.approximator);
  al::WelfareOptimum opt = al::OptimalWelfare(s.valuations);
  bool all_ok = true;
  for (size_t i = 0; i < s.valuations.size(); ++i) {
    al::ItemSet target = s.experiment.target.value_or(opt.allocation.bundles[i]);
    al::ApproxResult r = al::ApproximateToHomogeneous(a, s.valuations[i], target);
    bool ok = al::CheckPointwiseApprox(s.valuations[i], r.approx, r.target_set, r.beta);
    all_ok = all_ok && ok;
    std::cout << "bidder " << i << " target " << target.ToString() << ": "
              << r.approx.ToString() << "  beta " << al::ToString(r.beta)
              << (ok ? "  pointwise ok" : "  POINTWISE FAILURE") << '\n';
  }
  return all_ok ? kOk : kFailed;
}

int Reproduce(const std::string& name, const std::string& dir) {
  std::vector<std::string> names =
      name == "all" ? al::CorpusNames() : std::vector<std::string>{name};
  bool ok = true;
  double total = 0;
  for (const auto& n : names) {
    al::ReproduceReport r = al::Reproduce(n, dir);
    std::cout << r.ToString();
    ok = ok && r.ok();
    total += r.seconds;
  }
  if (names.size() > 1) std::cout << "total " << total << " s\n";
  return ok ? kOk : kFailed;
}

int Sweep(const Common& c, al::SweepOptions o, const std::string& kind) {
  if (!c.scenario.empty()) {
    al::Scenario s = Load(c);
    o.kind = s.config.kind;
    o.rules = s.plans.rules;
    if (s.plans.grid) o.step = s.plans.grid->Step();
  } else {
    o.kind = al::ParseMechanism(kind);
    if (!c.grid.empty()) o.step = al::ParseRational(c.grid);
  }
  if (c.seed) o.seed = *c.seed;
  if (c.cap) o.cap = *c.cap;
  std::vector<al::SweepRow> rows = al::RunSweep(o);
  std::string csv = al::SweepCsv(rows);
  if (c.out.empty()) std::cout << csv;
  WriteOut(c.out, csv);
  for (const auto& r : rows) {
    if (r.certificate && !r.certificate->holds) return kFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"auctionlab: draft and sequential auction experiments"};
  app.require_subcommand(1);

  Common run_c, nash_c, spe_c, smooth_c, approx_c, sweep_c;
  AddCommon(app.add_subcommand("run", "play the scenario's profile"), run_c, true);
  auto* nash = app.add_subcommand("nash", "check the profile, or enumerate pure Nash");
  AddCommon(nash, nash_c, true);
  bool undominated = false;
  nash->add_flag("--undominated", undominated, "ignore dominated deviations");
  AddCommon(app.add_subcommand("spe", "solve for a subgame perfect path"), spe_c, true);
  AddCommon(app.add_subcommand("smoothness", "check a smoothness certificate"), smooth_c, true);
  AddCommon(app.add_subcommand("approx", "build homogeneous approximations"), approx_c, true);

  auto* repro = app.add_subcommand("reproduce", "run a golden corpus entry");
  std::string name;
  std::string dir = al::DefaultScenarioDir();
  repro->add_option("name", name, "corpus entry or 'all'")->required();
  repro->add_option("--dir", dir, "scenario directory");

  auto* sweep = app.add_subcommand("sweep", "random instance sweep to CSV");
  AddCommon(sweep, sweep_c, false);
  al::SweepOptions so;
  std::string kind = "draft";
  bool no_nash = false, no_smooth = false;
  sweep->add_option("--family", so.family, "unit_demand|additive|homogeneous|concave|xos|subadditive");
  sweep->add_option("--n", so.n, "bidders");
  sweep->add_option("--m", so.m, "items");
  sweep->add_option("--instances", so.instances, "instances");
  sweep->add_option("--den", so.den, "value resolution");
  sweep->add_option("--kind", kind, "draft|single_item_draft|sequential");
  sweep->add_flag("--vary-size", so.vary_size, "draw n and m up to the given sizes");
  sweep->add_flag("--no-nash", no_nash, "skip equilibrium enumeration");
  sweep->add_flag("--no-smoothness", no_smooth, "skip smoothness certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "run") return Run(run_c);
    if (cmd == "nash") return Nash(nash_c, undominated);
    if (cmd == "spe") return Spe(spe_c);
    if (cmd == "smoothness") return Smoothness(smooth_c);
    if (cmd == "approx") return Approx(approx_c);
    if (cmd == "reproduce") return Reproduce(name, dir);
    so.nash = !no_nash;
    so.smoothness = !no_smooth;
    return Sweep(sweep_c, so, kind);
  } catch (const al::ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const al::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kFailed;
  } catch (const al::GuaranteeViolated& e) {
    std::cerr << "guarantee violated: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
