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

#include <random>

#include "auctionlab/correlated.h"
#include "auctionlab/engine.h"
#include "auctionlab/errors.h"
#include "auctionlab/nash.h"
#include "auctionlab/sweep.h"
#include "doctest.h"

namespace al = auctionlab;
using al::Bid;
using al::BidGrid;
using al::ItemSet;
using al::MechanismKind;
using al::Rational;
using al::SelectionRule;
using al::Valuation;

namespace {

Valuation UD(std::vector<Rational> v) { return Valuation::UnitDemand(std::move(v)); }

al::GameInstance Instance(MechanismKind kind, std::vector<Valuation> v, const BidGrid& grid,
                          std::vector<int> tie = {}) {
  auto config = al::MechanismConfig::Make(kind, static_cast<int>(v.size()),
                                          v.front().num_items());
  if (!tie.empty()) config.tie_break = std::move(tie);
  return al::MakeGridInstance(config, std::move(v), grid, grid, {SelectionRule::kBestItem});
}

// a values item 0 at 1; b and c value either item at 2.
std::vector<Valuation> TwoItems() { return {UD({1, 0}), UD({2, 2}), UD({2, 2})}; }

// Bidder `winner` takes item 0 at 1 over a's 1; `other` bids 0 and, should a
// take item 0, bids 1 for item 1.
al::Profile Assignment(const std::vector<Valuation>& v, int winner) {
  const int other = 3 - winner;
  Valuation vo = v[other];
  al::Profile p(3);
  p[0] = al::ConstantBidPlan({1, false}, SelectionRule::kBestItem, v[0]);
  p[winner] = al::ConstantBidPlan({1, true}, SelectionRule::kBestItem, v[winner]);
  p[other] = al::LambdaPlan(
      [vo](const al::History& h, int self) {
        Bid bid{0, false};
        if (h.round() == 1 && h.announcements()[0].winner == 0) bid = {1, false};
        return al::Action{bid, al::SelectDemand(SelectionRule::kBestItem, vo, h.BundleOf(self),
                                                h, bid.amount)};
      },
      "threat");
  return p;
}

}  // namespace

TEST_CASE("everyone bidding eps+ is a pure Nash equilibrium") {
  Rational eps(1, 100);
  std::vector<Valuation> v{UD({eps, 0, 0}), UD({1, 1, 0}), UD({0, 1, 1}),
                           UD({0, 0, Rational(1 - eps)})};
  auto inst = Instance(MechanismKind::kDraft, v, BidGrid::Parse("0,1/100,1/100+,1/2,1"));
  al::Profile p{al::ConstantBidPlan({0, false}, SelectionRule::kBestItemAlways, v[0])};
  for (int i = 1; i < 4; ++i) {
    p.push_back(al::ConstantBidPlan({eps, true}, SelectionRule::kBestItem, v[i]));
  }
  CHECK(al::IsPureNash(inst, p).is_nash);
}

TEST_CASE("a zero-value winner paying a positive price deviates") {
  std::vector<Valuation> v{UD({0}), UD({1})};
  auto inst = Instance(MechanismKind::kDraft, v, BidGrid::Uniform(Rational(1, 2), 1, true));
  al::Profile p{al::ConstantBidPlan({1, false}, SelectionRule::kAllOffered, v[0]),
                al::ConstantBidPlan({Rational(1, 2), false}, SelectionRule::kBestItem, v[1])};
  al::NashResult r = al::IsPureNash(inst, p);
  REQUIRE_FALSE(r.is_nash);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->bidder == 0);
  CHECK(r.witness->baseline == -1);
  CHECK(r.witness->improved > r.witness->baseline);

  al::Profile replay = p;
  replay[0] = r.witness->plan;
  CHECK(al::Utility(al::RunAuction(inst.config, replay), 0, v[0]) == r.witness->improved);
}

TEST_CASE("both assignments of the contested item are equilibria") {
  auto v = TwoItems();
  auto inst = Instance(MechanismKind::kDraft, v, BidGrid::Uniform(1, 2, true), {0, 1, 2});
  for (int winner : {1, 2}) {
    al::Profile p = Assignment(v, winner);
    al::Outcome o = al::RunAuction(inst.config, p);
    CHECK(o.allocation.bundles[winner] == ItemSet{0});
    CHECK(o.payments[winner] == 1);
    CHECK(al::IsPureNash(inst, p).is_nash);
  }
}

TEST_CASE("correlated equilibrium checks") {
  auto v = TwoItems();
  auto inst = Instance(MechanismKind::kDraft, v, BidGrid::Uniform(1, 2, true), {0, 1, 2});
  al::ProfileDistribution mix{{Assignment(v, 1), Rational(1, 2)},
                              {Assignment(v, 2), Rational(1, 2)}};
  CHECK(al::VerifyCorrelatedEquilibrium(inst, mix).is_equilibrium);
  CHECK(al::VerifyCorrelatedEquilibrium(inst, {{Assignment(v, 1), 1}}).is_equilibrium);

  al::Profile bad{al::ConstantBidPlan({2, false}, SelectionRule::kBestItem, v[0]),
                  al::ConstantBidPlan({0, false}, SelectionRule::kBestItem, v[1]),
                  al::ConstantBidPlan({0, false}, SelectionRule::kBestItem, v[2])};
  al::CorrelatedCheck c = al::VerifyCorrelatedEquilibrium(inst, {{bad, 1}});
  CHECK_FALSE(c.is_equilibrium);
  CHECK(c.gain > 0);
  CHECK_THROWS_AS(al::VerifyCorrelatedEquilibrium(inst, {{bad, Rational(1, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("mixed plans are rejected by the pure check") {
  auto v = TwoItems();
  auto inst = Instance(MechanismKind::kDraft, v, BidGrid::Uniform(1, 2, true));
  al::Profile p = Assignment(v, 1);
  p[0] = al::MixedPlan({p[0], al::DropOutPlan()}, {Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(al::IsPureNash(inst, p), std::invalid_argument);
}

TEST_CASE("a lone bidder's equilibria are efficient") {
  auto inst = Instance(MechanismKind::kDraft, {UD({1, 3})}, BidGrid::Uniform(1, 3, false));
  al::EquilibriumReport r = al::EnumeratePureNash(inst);
  REQUIRE(r.found());
  CHECK(*r.poa == 1);
  for (const auto& e : r.equilibria) CHECK(e.welfare == 3);
}

TEST_CASE("enumeration respects the profile cap") {
  auto inst = Instance(MechanismKind::kDraft, TwoItems(), BidGrid::Uniform(1, 2, true));
  CHECK_THROWS_AS(al::EnumeratePureNash(inst, {}, 10), al::CapExceeded);
}

TEST_CASE("unit-demand equilibria lose at most half the optimum plus grid slack") {
  std::mt19937_64 rng(23);
  const Rational step(1, 4);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + trial % 2, m = 1 + trial % 3;
    std::vector<Valuation> v;
    for (int i = 0; i < n; ++i) v.push_back(al::RandomUnitDemand(rng, m, 4));
    auto config = al::MechanismConfig::Make(MechanismKind::kDraft, n, m);
    auto inst = al::MakeGridInstance(config, v, BidGrid::Uniform(step, 1, false),
                                     BidGrid::Uniform(step, 1, true), {SelectionRule::kBestItem});
    al::EquilibriumReport r = al::EnumeratePureNash(inst);
    for (const auto& e : r.equilibria) CHECK(r.opt_welfare <= 2 * e.welfare + 2 * n * step);
  }
}

TEST_CASE("equilibrium report CSV") {
  auto inst = Instance(MechanismKind::kDraft, {UD({1, 3})}, BidGrid::Uniform(1, 3, false));
  std::string csv = al::EnumeratePureNash(inst).ToCsv();
  CHECK(csv.rfind("# auctionlab equilibria v1 kind=pure_nash", 0) == 0);
  CHECK(csv.find("profile_id,welfare,revenue,opt,ratio,ratio_decimal") != std::string::npos);
}

TEST_CASE("a finer candidate grid never lowers the reported ratio") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Valuation> v;
    for (int i = 0; i < 2; ++i) v.push_back(al::RandomUnitDemand(rng, 2, 2));
    auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 2);
    const BidGrid deviation = BidGrid::Uniform(Rational(1, 2), 1, true);
    auto coarse = al::MakeGridInstance(config, v, BidGrid::Uniform(1, 1, false), deviation,
                                       {SelectionRule::kBestItem});
    auto fine = al::MakeGridInstance(config, v, BidGrid::Uniform(Rational(1, 2), 1, false),
                                     deviation, {SelectionRule::kBestItem});
    al::EquilibriumReport a = al::EnumeratePureNash(coarse);
    al::EquilibriumReport b = al::EnumeratePureNash(fine);
    CHECK(b.equilibria.size() >= a.equilibria.size());
    if (a.poa && b.poa) CHECK(*b.poa >= *a.poa);
  }
}
