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

#include "auctionlab/nash.h"

#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "auctionlab/errors.h"

namespace auctionlab {

namespace {

std::vector<int> Ranks(const MechanismConfig& config) {
  std::vector<int> rank(config.num_bidders);
  for (int r = 0; r < config.num_bidders; ++r) rank[config.tie_break[r]] = r;
  return rank;
}

std::string Decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", ToDouble(q));
  return buf;
}

class DeviationSearch {
 public:
  DeviationSearch(const GameInstance& g, const Profile& profile, int self,
                  const NashOptions& options)
      : g_(g),
        profile_(profile),
        self_(self),
        options_(options),
        v_(g.valuations.at(self)),
        rank_(Ranks(g.config)) {
    for (int j = 0; j < g.num_bidders(); ++j) {
      if (j != self && profile_[j]->ObservesBidAmounts()) see_amounts_ = true;
    }
  }

  std::optional<BestResponse> Run(std::optional<Rational> improve_on) {
    if (improve_on) {
      best_ = *improve_on;
      have_best_ = true;
      stop_on_improve_ = true;
    }
    History h(g_.config);
    Visit(h);
    if (!improved_) return std::nullopt;
    std::map<std::string, Action> table(best_path_.begin(), best_path_.end());
    return BestResponse{best_, ScriptedPlan(std::move(table)), nodes_};
  }

 private:
  void Leaf(const History& h) {
    Rational u = v_.Value(h.BundleOf(self_)) - h.PaidBy(self_);
    if (!have_best_ || u > best_) {
      best_ = u;
      have_best_ = true;
      improved_ = true;
      best_path_ = path_;
      if (stop_on_improve_) done_ = true;
    }
  }

  void Visit(const History& h) {
    if (done_) return;
    if (++nodes_ > options_.node_cap) {
      throw CapExceeded("best-response search exceeded " +
                        std::to_string(options_.node_cap) + " nodes");
    }
    if (h.Finished()) {
      Leaf(h);
      return;
    }
    const ItemSet held = h.BundleOf(self_);
    const Rational paid = h.PaidBy(self_);
    const Rational bound = v_.Value(held | h.Remaining()) - paid;
    if (have_best_ && bound <= best_) return;

    const ItemSet offered = h.Offered();
    const int max_pick = h.MaxPick();
    int top = -1;
    Action top_action;
    for (int j = 0; j < g_.num_bidders(); ++j) {
      if (j == self_) continue;
      Action a = profile_[j]->Act(h, j);
      if (a.abstains()) continue;
      if (!a.demand.IsSubsetOf(offered) ||
          (max_pick > 0 && a.demand.size() > max_pick)) {
        throw MalformedPlan("bidder " + std::to_string(j) + " demanded " +
                            a.demand.ToString() + " outside the offer");
      }
      if (top < 0 || a.bid > top_action.bid ||
          (a.bid == top_action.bid && rank_[j] < rank_[top])) {
        top = j;
        top_action = a;
      }
    }

    const std::string key = h.Key();

    // Sit the round out.
    path_.emplace_back(key, Action::Abstain());
    if (top >= 0) {
      History next = h;
      next.Append({top, top_action.bid, top_action.demand});
      Visit(next);
    } else if (g_.config.kind == MechanismKind::kSequentialItem) {
      History next = h;
      next.Append({-1, Bid{}, ItemSet()});
      Visit(next);
    } else {
      Leaf(h);
    }
    path_.pop_back();
    if (done_) return;

    // Win the round.
    std::optional<Bid> least;
    if (top < 0) {
      least = g_.grid.bids().front();
    } else {
      least = g_.grid.LeastAbove(top_action.bid, rank_[top] < rank_[self_]);
    }
    if (!least) return;
    std::vector<Bid> bids;
    for (const Bid& b : g_.grid.bids()) {
      if (b < *least) continue;
      bids.push_back(b);
      if (!see_amounts_) break;
    }
    std::vector<ItemSet> demands;
    ForEachSubset(offered, [&](ItemSet x) {
      if (x.empty() || (max_pick > 0 && x.size() > max_pick)) return;
      demands.push_back(x);
    });
    for (const Bid& b : bids) {
      for (ItemSet x : demands) {
        if (done_) return;
        const Rational price = b.amount * x.size();
        if (options_.undominated && price > v_.Marginal(held, x)) continue;
        if (have_best_ && bound - price <= best_) continue;
        History next = h;
        next.Append({self_, b, x});
        path_.emplace_back(key, Action{b, x});
        Visit(next);
        path_.pop_back();
      }
    }
  }

  const GameInstance& g_;
  const Profile& profile_;
  int self_;
  NashOptions options_;
  const Valuation& v_;
  std::vector<int> rank_;
  bool see_amounts_ = false;

  Rational best_;
  bool have_best_ = false;
  bool improved_ = false;
  bool stop_on_improve_ = false;
  bool done_ = false;
  uint64_t nodes_ = 0;
  std::vector<std::pair<std::string, Action>> path_;
  std::vector<std::pair<std::string, Action>> best_path_;
};

void RequirePure(const Profile& profile) {
  std::mt19937_64 rng(0);
  for (const auto& p : profile) {
    if (!p) throw std::invalid_argument("null plan in profile");
    if (p->Resolve(rng)) {
      throw std::invalid_argument("pure Nash check given a mixed plan: " +
                                  p->Describe());
    }
  }
}

NashResult Check(const GameInstance& g, const Profile& profile,
                 const Outcome& outcome, const NashOptions& options) {
  NashResult result;
  for (int i = 0; i < g.num_bidders(); ++i) {
    const Valuation& v = g.valuations[i];
    const Rational base = Utility(outcome, i, v);
    std::optional<DeviationWitness> witness;
    if (options.scope == DeviationScope::kPlanSpace) {
      for (const auto& alt : g.plan_spaces[i]) {
        Profile deviated = profile;
        deviated[i] = alt;
        Rational u = Utility(RunAuction(g.config, deviated), i, v);
        if (u > base) {
          witness = DeviationWitness{i, alt, base, u};
          break;
        }
      }
    } else if (auto br = FindBestResponse(g, profile, i, options, base)) {
      witness = DeviationWitness{i, br->plan, base, br->utility};
    }
    if (witness) {
      Profile deviated = profile;
      deviated[i] = witness->plan;
      if (Utility(RunAuction(g.config, deviated), i, v) != witness->improved) {
        throw std::logic_error("deviation witness does not replay");
      }
      result.is_nash = false;
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

}  // namespace

std::string DeviationWitness::ToString() const {
  return "bidder " + std::to_string(bidder) + " gains by switching to " +
         (plan ? plan->Describe() : "?") + ": " + auctionlab::ToString(baseline) +
         " -> " + auctionlab::ToString(improved);
}

std::optional<BestResponse> FindBestResponse(const GameInstance& instance,
                                             const Profile& profile, int bidder,
                                             const NashOptions& options,
                                             std::optional<Rational> improve_on) {
  instance.Validate();
  if (bidder < 0 || bidder >= instance.num_bidders()) {
    throw std::out_of_range("bidder index out of range");
  }
  if (static_cast<int>(profile.size()) != instance.num_bidders()) {
    throw std::invalid_argument("profile size does not match bidders");
  }
  RequirePure(profile);
  return DeviationSearch(instance, profile, bidder, options).Run(improve_on);
}

NashResult IsPureNash(const GameInstance& instance, const Profile& profile,
                      const NashOptions& options) {
  instance.Validate();
  if (static_cast<int>(profile.size()) != instance.num_bidders()) {
    throw std::invalid_argument("profile size does not match bidders");
  }
  RequirePure(profile);
  return Check(instance, profile, RunAuction(instance.config, profile), options);
}

std::string EquilibriumKindName(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kPureNash: return "pure_nash";
    case EquilibriumKind::kSpe: return "spe";
    case EquilibriumKind::kCorrelated: return "correlated";
  }
  return "unknown";
}

void EquilibriumReport::Summarize() {
  poa.reset();
  pos.reset();
  if (equilibria.empty()) return;
  Rational lo = equilibria.front().welfare;
  Rational hi = lo;
  for (const auto& e : equilibria) {
    if (e.welfare < lo) lo = e.welfare;
    if (e.welfare > hi) hi = e.welfare;
  }
  auto ratio = [&](const Rational& w) -> std::optional<Rational> {
    if (w > 0) return Rational(opt_welfare / w);
    if (opt_welfare == 0) return Rational(1);
    return std::nullopt;
  };
  poa = ratio(lo);
  pos = ratio(hi);
}

std::string EquilibriumReport::ToCsv() const {
  std::ostringstream os;
  os << "# auctionlab equilibria v1 kind=" << EquilibriumKindName(kind) << '\n';
  os << "profile_id,welfare,revenue,opt,ratio,ratio_decimal\n";
  for (const auto& e : equilibria) {
    os << e.id << ',' << auctionlab::ToString(e.welfare) << ','
       << auctionlab::ToString(e.revenue) << ',' << auctionlab::ToString(opt_welfare)
       << ',';
    if (e.welfare > 0) {
      Rational r = opt_welfare / e.welfare;
      os << auctionlab::ToString(r) << ',' << Decimal(r);
    } else {
      os << "inf,inf";
    }
    os << '\n';
  }
  return os.str();
}

std::string EquilibriumReport::ToString() const {
  std::ostringstream os;
  os << EquilibriumKindName(kind) << ": " << equilibria.size()
     << " equilibria over " << profiles_checked << " profiles, OPT "
     << auctionlab::ToString(opt_welfare);
  if (poa) os << ", PoA " << auctionlab::ToString(*poa) << " (" << Decimal(*poa) << ")";
  if (pos) os << ", PoS " << auctionlab::ToString(*pos) << " (" << Decimal(*pos) << ")";
  if (!note.empty()) os << " [" << note << "]";
  return os.str();
}

EquilibriumReport EnumeratePureNash(const GameInstance& instance,
                                    const NashOptions& options, uint64_t cap) {
  instance.Validate();
  EquilibriumReport report;
  report.kind = EquilibriumKind::kPureNash;
  report.opt_welfare = OptimalWelfare(instance.valuations).welfare;
  ForEachProfile(instance, cap, [&](const Profile& profile,
                                    const std::vector<size_t>& index) {
    ++report.profiles_checked;
    RequirePure(profile);
    Outcome outcome = RunAuction(instance.config, profile);
    if (!Check(instance, profile, outcome, options).is_nash) return;
    std::string id;
    for (size_t k : index) id += (id.empty() ? "" : ".") + std::to_string(k);
    Rational welfare = OutcomeWelfare(outcome, instance.valuations);
    Rational revenue = Revenue(outcome);
    report.equilibria.push_back(
        {id, profile, std::move(outcome), std::move(welfare), std::move(revenue)});
  });
  report.Summarize();
  if (!report.found()) report.note = "no pure equilibrium in the candidate space";
  return report;
}

}  // namespace auctionlab
