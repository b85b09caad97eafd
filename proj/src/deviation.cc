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

#include "auctionlab/deviation.h"

#include <stdexcept>

namespace auctionlab {

namespace {

class UnitDemand final : public BidPlan {
 public:
  UnitDemand(PlanPtr original, int item, Rational value)
      : original_(std::move(original)), item_(item), star_{value / 2, false} {}

  Action Act(const History& h, int self) const override {
    if (!h.Remaining().contains(item_) || !h.BundleOf(self).empty() ||
        !h.Offered().contains(item_)) {
      return Action::Abstain();
    }
    Action orig = original_->Act(h, self);
    Bid bid = (orig.abstains() || star_ > orig.bid) ? star_ : orig.bid;
    return {bid, ItemSet::Single(item_)};
  }

  bool ObservesBidAmounts() const override {
    return original_->ObservesBidAmounts();
  }

  std::string Describe() const override {
    return "unit_demand_deviation(item " + std::to_string(item_) + ", " +
           star_.ToString() + ") over " + original_->Describe();
  }

 private:
  PlanPtr original_;
  int item_;
  Bid star_;
};

class Core final : public BidPlan {
 public:
  Core(PlanPtr original, ItemSet interest, Rational per_unit)
      : original_(std::move(original)),
        interest_(interest),
        target_(CoreTargetUnits(interest)),
        star_{per_unit / 2, false} {}

  Action Act(const History& h, int self) const override {
    State st = Replay(h, self);
    if (st.dropped) return Action::Abstain();
    if (st.reverted || ShouldRevert(h, st.units)) return original_->Act(h, self);
    return Decide(h, self, st.units).first;
  }

  bool ObservesBidAmounts() const override {
    return original_->ObservesBidAmounts();
  }

  std::string Describe() const override {
    return "core_deviation(S=" + interest_.ToString() + ", b*=" +
           star_.ToString() + ") over " + original_->Describe();
  }

 private:
  struct State {
    int units = 0;
    bool dropped = false;
    bool reverted = false;
  };

  bool ShouldRevert(const History& h, int units) const {
    return units >= target_ || (h.Remaining() & interest_).size() < target_ - units;
  }

  // The action while still pursuing the target, and whether it is the
  // star bid.
  std::pair<Action, bool> Decide(const History& h, int self, int units) const {
    Action orig = original_->Act(h, self);
    if (orig.abstains() || star_ > orig.bid) {
      ItemSet want = (h.Offered() & interest_).Lowest(target_ - units);
      if (h.MaxPick() > 0) want = want.Lowest(h.MaxPick());
      if (want.empty()) return {orig, false};
      return {Action{star_, want}, true};
    }
    return {orig, false};
  }

  State Replay(const History& h, int self) const {
    State st;
    const auto& rounds = h.announcements();
    for (int t = 0; t < h.round(); ++t) {
      if (st.dropped || st.reverted) break;
      History prefix = h.Prefix(t);
      if (ShouldRevert(prefix, st.units)) {
        st.reverted = true;
        break;
      }
      if (rounds[t].winner != self) continue;
      bool star = Decide(prefix, self, st.units).second;
      st.units += (rounds[t].bundle & interest_).size();
      if (star) st.dropped = true;
    }
    return st;
  }

  PlanPtr original_;
  ItemSet interest_;
  int target_;
  Bid star_;
};

}  // namespace

PlanPtr UnitDemandDeviation(PlanPtr original, int target_item,
                            Rational target_value) {
  if (target_value < 0) throw std::invalid_argument("negative target value");
  return std::make_shared<UnitDemand>(std::move(original), target_item,
                                      std::move(target_value));
}

int CoreTargetUnits(ItemSet interest) { return (interest.size() + 1) / 2; }

PlanPtr CoreDeviation(PlanPtr original, ItemSet interest, Rational per_unit) {
  if (per_unit < 0) throw std::invalid_argument("negative per-unit value");
  return std::make_shared<Core>(std::move(original), interest, std::move(per_unit));
}

int FirstDivergentWin(const Outcome& deviated, int self, const BidPlan& original) {
  const History& h = deviated.history;
  for (int t = 0; t < h.round(); ++t) {
    const Announcement& a = h.announcements()[t];
    if (a.winner != self) continue;
    Action orig = original.Act(h.Prefix(t), self);
    if (orig.abstains() || orig.bid != a.bid || orig.demand != a.bundle) return t;
  }
  return -1;
}

}  // namespace auctionlab
