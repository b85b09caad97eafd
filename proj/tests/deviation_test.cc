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
#include "auctionlab/engine.h"
#include "auctionlab/smoothness.h"
#include "doctest.h"

namespace al = auctionlab;
using al::Bid;
using al::ItemSet;
using al::MechanismKind;
using al::Rational;
using al::SelectionRule;
using al::Valuation;

TEST_CASE("unit-demand deviation bids half the target value until it wins") {
  Valuation v = Valuation::UnitDemand({0, 10});
  Valuation rival = Valuation::UnitDemand({1, 6});
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 2);
  al::PlanPtr zero = al::ConstantBidPlan({0, false}, SelectionRule::kBestItem, v);
  al::PlanPtr dev = al::UnitDemandDeviation(zero, 1, 10);

  al::History h(config);
  al::Action a = dev->Act(h, 0);
  CHECK(a.bid == Bid{5, false});
  CHECK(a.demand == ItemSet{1});

  // The rival outbids 5 and takes item 1; nothing is left to chase.
  al::Profile p{dev, al::ConstantBidPlan({6, false}, SelectionRule::kBestItem, rival)};
  al::Outcome o = al::RunAuction(config, p);
  CHECK(o.allocation.bundles[1] == ItemSet{1});
  CHECK(o.allocation.bundles[0].empty());
  for (int k = 1; k < o.history.round(); ++k) {
    CHECK(dev->Act(o.history.Prefix(k), 0).abstains());
  }
}

TEST_CASE("with a zero target value the deviation keeps the original bid") {
  Valuation v = Valuation::UnitDemand({3, 3});
  al::PlanPtr orig = al::ConstantBidPlan({1, false}, SelectionRule::kAllOffered, v);
  al::PlanPtr dev = al::UnitDemandDeviation(orig, 1, 0);
  al::History h(al::MechanismConfig::Make(MechanismKind::kDraft, 1, 2));
  al::Action a = dev->Act(h, 0);
  CHECK(a.bid == Bid{1, false});
  CHECK(a.demand == ItemSet{1});
}

TEST_CASE("C chasing its best item in the three-by-three outcome") {
  std::vector<Valuation> v{Valuation::UnitDemand({32, 31, 83}),
                           Valuation::UnitDemand({9, 84, 97}),
                           Valuation::UnitDemand({2, 42, 93})};
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 3, 3);
  al::Profile b{
      al::RoundSchedulePlan({{51, false}, {0, false}, {0, false}}, SelectionRule::kBestItem, v[0]),
      al::RoundSchedulePlan({{51, true}}, SelectionRule::kBestItem, v[1]),
      al::RoundSchedulePlan({{0, false}, {0, true}, {0, false}}, SelectionRule::kBestItem, v[2]),
  };
  al::Outcome base = al::RunAuction(config, b);
  al::Profile dev = b;
  dev[2] = al::UnitDemandDeviation(b[2], 2, 93);
  al::Outcome o = al::RunAuction(config, dev);
  CHECK(o.transcript[0].winner == 1);  // 93/2 < 51
  Rational u = al::Utility(o, 2, v[2]);
  CHECK(u >= Rational(93, 2) - base.item_prices[2] - base.payments[2]);
}

TEST_CASE("core deviation opens with half the unit value on half the items") {
  Valuation v = Valuation::ConstraintHomogeneous(4, ItemSet::All(4), 2);
  al::PlanPtr zero = al::ConstantBidPlan({0, false}, SelectionRule::kAllOffered, v);
  al::PlanPtr dev = al::CoreDeviation(zero, ItemSet::All(4), 2);
  CHECK(al::CoreTargetUnits(ItemSet::All(4)) == 2);
  CHECK(al::CoreTargetUnits(ItemSet{0, 1, 2}) == 2);
  al::Action a = dev->Act(al::History(al::MechanismConfig::Make(MechanismKind::kDraft, 1, 4)), 0);
  CHECK(a.bid == Bid{1, false});
  CHECK(a.demand == ItemSet{0, 1});
}

TEST_CASE("cheap units: the core deviation completes its target") {
  Valuation v = Valuation::ConstraintHomogeneous(4, ItemSet::All(4), 2);
  Valuation rival = Valuation::Additive({1, 1, 1, 1});
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 4);
  al::Profile b{al::ConstantBidPlan({0, false}, SelectionRule::kBestItem, v),
                al::ConstantBidPlan({Rational(1, 2), false}, SelectionRule::kAllOffered, rival)};
  al::CoreLemmaCheck c = al::CheckCoreDeviationLemma(config, b, 0, v, ItemSet::All(4), 2);
  CHECK(c.units == 2);
  CHECK(c.target_units == 2);
  CHECK(c.utility >= Rational(c.target_units) * 2 / 2 - al::RunAuction(config, b).payments[0]);
  CHECK(c.lemma_holds());
  CHECK(c.split_holds(2));
}

TEST_CASE("expensive units: the threshold price reaches half the unit value") {
  Valuation v = Valuation::ConstraintHomogeneous(4, ItemSet::All(4), 2);
  Valuation rival = Valuation::Additive({2, 2, 2, 2});
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 4);
  al::Profile b{al::ConstantBidPlan({0, false}, SelectionRule::kBestItem, v),
                al::ConstantBidPlan({Rational(3, 2), false}, SelectionRule::kAllOffered, rival)};
  al::CoreLemmaCheck c = al::CheckCoreDeviationLemma(config, b, 0, v, ItemSet::All(4), 2);
  CHECK(c.units < c.target_units);
  REQUIRE(c.threshold_price.has_value());
  CHECK(*c.threshold_price >= 1);
  CHECK(c.lemma_holds());
  CHECK(c.split_holds(2));
}
