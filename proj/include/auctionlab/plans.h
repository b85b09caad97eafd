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

#ifndef AUCTIONLAB_PLANS_H_
#define AUCTIONLAB_PLANS_H_

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "auctionlab/history.h"
#include "auctionlab/valuation.h"

namespace auctionlab {

// A deterministic map from the public history to this round's action. Plans
// are immutable; Act must return a demand inside history.Offered() whose
// size respects history.MaxPick().
class BidPlan {
 public:
  virtual ~BidPlan() = default;
  virtual Action Act(const History& history, int self) const = 0;
  virtual std::string Describe() const = 0;

  // Mixed plans draw a pure plan here; pure plans return nullptr.
  virtual std::shared_ptr<const BidPlan> Resolve(std::mt19937_64& rng) const {
    (void)rng;
    return nullptr;
  }

  // False when Act depends on the history only through the round index,
  // the remaining items and who won which bundle, never on announced bid
  // amounts. Solvers use this to collapse equivalent winning bids.
  virtual bool ObservesBidAmounts() const { return true; }
};

using PlanPtr = std::shared_ptr<const BidPlan>;
using Profile = std::vector<PlanPtr>;

enum class SelectionRule {
  kBestItem,            // best single item by marginal value; abstain if 0
  kBestItemAlways,      // same, but never abstains while items are offered
  kUtilityMaximizing,   // bundle maximizing marginal value - bid * size
  kAllOffered,          // everything offered (up to the pick limit)
  kPreferenceList,      // first offered item of a fixed list
};

std::string RuleName(SelectionRule rule);
SelectionRule ParseRule(const std::string& name);

// Picks the demand for a bidder holding `held`, facing `history`, if it wins
// at per-item price `amount`.
ItemSet SelectDemand(SelectionRule rule, const Valuation& v, ItemSet held,
                     const History& history, const Rational& amount,
                     const std::vector<int>& preferences = {});

// Bids the same amount every round while the rule demands something.
PlanPtr ConstantBidPlan(Bid bid, SelectionRule rule, Valuation valuation,
                        std::vector<int> preferences = {});

// Bids schedule[t] in round t (the last entry repeats).
PlanPtr RoundSchedulePlan(std::vector<Bid> schedule, SelectionRule rule,
                          Valuation valuation);

// Bids its marginal value for the best single offered item and demands it.
PlanPtr TruthfulMarginalPlan(Valuation valuation);

PlanPtr DropOutPlan();

// Plays a decision table keyed by History::Key(); unknown histories fall
// back to `fallback` (or abstain when it is null).
PlanPtr ScriptedPlan(std::map<std::string, Action> table,
                     PlanPtr fallback = nullptr);

// Draws one component per auction with the given weights.
PlanPtr MixedPlan(std::vector<PlanPtr> support, std::vector<Rational> weights);

// Wraps an arbitrary function; used by tests and solvers.
PlanPtr LambdaPlan(std::function<Action(const History&, int)> fn,
                   std::string description);

}  // namespace auctionlab

#endif  // AUCTIONLAB_PLANS_H_
