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

#include "auctionlab/plans.h"

#include <stdexcept>

namespace auctionlab {

std::string RuleName(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kBestItem: return "best_item";
    case SelectionRule::kBestItemAlways: return "best_item_always";
    case SelectionRule::kUtilityMaximizing: return "utility";
    case SelectionRule::kAllOffered: return "all";
    case SelectionRule::kPreferenceList: return "preference";
  }
  return "unknown";
}

SelectionRule ParseRule(const std::string& name) {
  if (name == "best_item") return SelectionRule::kBestItem;
  if (name == "best_item_always") return SelectionRule::kBestItemAlways;
  if (name == "utility") return SelectionRule::kUtilityMaximizing;
  if (name == "all") return SelectionRule::kAllOffered;
  if (name == "preference") return SelectionRule::kPreferenceList;
  throw std::invalid_argument("unknown selection rule '" + name + "'");
}

ItemSet SelectDemand(SelectionRule rule, const Valuation& v, ItemSet held,
                     const History& history, const Rational& amount,
                     const std::vector<int>& preferences) {
  const ItemSet offered = history.Offered();
  const int max_pick = history.MaxPick();
  if (offered.empty()) return ItemSet();
  switch (rule) {
    case SelectionRule::kBestItem:
    case SelectionRule::kBestItemAlways: {
      int best = -1;
      Rational best_gain = -1;
      for (int j : offered.Members()) {
        Rational gain = v.Marginal(held, ItemSet::Single(j));
        if (gain > best_gain) {
          best_gain = gain;
          best = j;
        }
      }
      if (rule == SelectionRule::kBestItem && best_gain <= 0) return ItemSet();
      return ItemSet::Single(best);
    }
    case SelectionRule::kUtilityMaximizing: {
      ItemSet best;
      Rational best_surplus = 0;
      ForEachSubset(offered, [&](ItemSet x) {
        if (x.empty() || (max_pick > 0 && x.size() > max_pick)) return;
        Rational surplus = v.Marginal(held, x) - amount * x.size();
        if (surplus <= 0) return;
        if (surplus > best_surplus ||
            (surplus == best_surplus && x.size() < best.size())) {
          best_surplus = surplus;
          best = x;
        }
      });
      return best;
    }
    case SelectionRule::kAllOffered:
      return max_pick > 0 ? offered.Lowest(max_pick) : offered;
    case SelectionRule::kPreferenceList:
      for (int j : preferences) {
        if (offered.contains(j)) return ItemSet::Single(j);
      }
      return ItemSet();
  }
  return ItemSet();
}

namespace {

class ConstantBid final : public BidPlan {
 public:
  ConstantBid(Bid bid, SelectionRule rule, Valuation v, std::vector<int> prefs)
      : bid_(std::move(bid)), rule_(rule), v_(std::move(v)), prefs_(std::move(prefs)) {}

  Action Act(const History& h, int self) const override {
    ItemSet demand =
        SelectDemand(rule_, v_, h.BundleOf(self), h, bid_.amount, prefs_);
    if (demand.empty()) return Action::Abstain();
    return {bid_, demand};
  }

  std::string Describe() const override {
    std::string s = "constant " + bid_.ToString() + " " + RuleName(rule_);
    for (int j : prefs_) s += " " + std::to_string(j);
    return s;
  }
  bool ObservesBidAmounts() const override { return false; }

 private:
  Bid bid_;
  SelectionRule rule_;
  Valuation v_;
  std::vector<int> prefs_;
};

class RoundSchedule final : public BidPlan {
 public:
  RoundSchedule(std::vector<Bid> schedule, SelectionRule rule, Valuation v)
      : schedule_(std::move(schedule)), rule_(rule), v_(std::move(v)) {
    if (schedule_.empty()) throw std::invalid_argument("empty bid schedule");
  }

  Action Act(const History& h, int self) const override {
    size_t t = std::min<size_t>(h.round(), schedule_.size() - 1);
    const Bid& bid = schedule_[t];
    ItemSet demand = SelectDemand(rule_, v_, h.BundleOf(self), h, bid.amount);
    if (demand.empty()) return Action::Abstain();
    return {bid, demand};
  }

  std::string Describe() const override {
    std::string s = "schedule";
    for (const auto& b : schedule_) s += " " + b.ToString();
    return s + " " + RuleName(rule_);
  }
  bool ObservesBidAmounts() const override { return false; }

 private:
  std::vector<Bid> schedule_;
  SelectionRule rule_;
  Valuation v_;
};

class TruthfulMarginal final : public BidPlan {
 public:
  explicit TruthfulMarginal(Valuation v) : v_(std::move(v)) {}

  Action Act(const History& h, int self) const override {
    ItemSet held = h.BundleOf(self);
    ItemSet demand = SelectDemand(SelectionRule::kBestItem, v_, held, h, 0);
    if (demand.empty()) return Action::Abstain();
    return {Bid{v_.Marginal(held, demand), false}, demand};
  }

  std::string Describe() const override { return "truthful_marginal"; }
  bool ObservesBidAmounts() const override { return false; }

 private:
  Valuation v_;
};

class DropOut final : public BidPlan {
 public:
  Action Act(const History&, int) const override { return Action::Abstain(); }
  std::string Describe() const override { return "drop_out"; }
  bool ObservesBidAmounts() const override { return false; }
};

class Scripted final : public BidPlan {
 public:
  Scripted(std::map<std::string, Action> table, PlanPtr fallback)
      : table_(std::move(table)), fallback_(std::move(fallback)) {}

  Action Act(const History& h, int self) const override {
    auto it = table_.find(h.Key());
    if (it != table_.end()) return it->second;
    return fallback_ ? fallback_->Act(h, self) : Action::Abstain();
  }

  std::string Describe() const override {
    return "scripted(" + std::to_string(table_.size()) + " entries)";
  }

 private:
  std::map<std::string, Action> table_;
  PlanPtr fallback_;
};

class Mixed final : public BidPlan {
 public:
  Mixed(std::vector<PlanPtr> support, std::vector<Rational> weights)
      : support_(std::move(support)), weights_(std::move(weights)) {
    if (support_.empty() || support_.size() != weights_.size()) {
      throw std::invalid_argument("mixed plan: support/weight mismatch");
    }
    Rational total = 0;
    for (const auto& w : weights_) {
      if (w < 0) throw std::invalid_argument("mixed plan: negative weight");
      total += w;
    }
    if (total != 1) throw std::invalid_argument("mixed plan: weights must sum to 1");
  }

  Action Act(const History& h, int self) const override {
    // Unresolved use plays the first component.
    return support_.front()->Act(h, self);
  }

  PlanPtr Resolve(std::mt19937_64& rng) const override {
    // Exact draw: uniform integer over the common denominator.
    mpz_class den = 1;
    for (const auto& w : weights_) {
      mpz_class d = w.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    // Denominators here are small; a 64-bit draw reduced modulo den is
    // deterministic given the seed.
    mpz_class draw = static_cast<unsigned long>(rng() >> 1);
    draw %= den;
    mpz_class acc = 0;
    for (size_t k = 0; k < support_.size(); ++k) {
      mpz_class share = weights_[k].get_num() * (den / weights_[k].get_den());
      acc += share;
      if (draw < acc) return support_[k];
    }
    return support_.back();
  }

  std::string Describe() const override {
    return "mixed(" + std::to_string(support_.size()) + ")";
  }

 private:
  std::vector<PlanPtr> support_;
  std::vector<Rational> weights_;
};

class Lambda final : public BidPlan {
 public:
  Lambda(std::function<Action(const History&, int)> fn, std::string d)
      : fn_(std::move(fn)), description_(std::move(d)) {}
  Action Act(const History& h, int self) const override { return fn_(h, self); }
  std::string Describe() const override { return description_; }

 private:
  std::function<Action(const History&, int)> fn_;
  std::string description_;
};

}  // namespace

PlanPtr ConstantBidPlan(Bid bid, SelectionRule rule, Valuation valuation,
                        std::vector<int> preferences) {
  return std::make_shared<ConstantBid>(std::move(bid), rule, std::move(valuation),
                                       std::move(preferences));
}

PlanPtr RoundSchedulePlan(std::vector<Bid> schedule, SelectionRule rule,
                          Valuation valuation) {
  return std::make_shared<RoundSchedule>(std::move(schedule), rule,
                                         std::move(valuation));
}

PlanPtr TruthfulMarginalPlan(Valuation valuation) {
  return std::make_shared<TruthfulMarginal>(std::move(valuation));
}

PlanPtr DropOutPlan() { return std::make_shared<DropOut>(); }

PlanPtr ScriptedPlan(std::map<std::string, Action> table, PlanPtr fallback) {
  return std::make_shared<Scripted>(std::move(table), std::move(fallback));
}

PlanPtr MixedPlan(std::vector<PlanPtr> support, std::vector<Rational> weights) {
  return std::make_shared<Mixed>(std::move(support), std::move(weights));
}

PlanPtr LambdaPlan(std::function<Action(const History&, int)> fn,
                   std::string description) {
  return std::make_shared<Lambda>(std::move(fn), std::move(description));
}

}  // namespace auctionlab
