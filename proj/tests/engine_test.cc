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

#include "auctionlab/engine.h"
#include "doctest.h"

namespace al = auctionlab;
using al::Bid;
using al::ItemSet;
using al::MechanismKind;
using al::Rational;
using al::SelectionRule;
using al::Valuation;

namespace {

Valuation UD(std::vector<Rational> v) { return Valuation::UnitDemand(std::move(v)); }

std::vector<Valuation> Matrix() {
  return {UD({32, 31, 83}), UD({9, 84, 97}), UD({2, 42, 93})};
}

// B takes item 2 at 51+ over A's 51, then C takes item 1, then A item 0.
al::Profile LowerProfile(const std::vector<Valuation>& v) {
  return {
      al::RoundSchedulePlan({{51, false}, {0, false}, {0, false}}, SelectionRule::kBestItem, v[0]),
      al::RoundSchedulePlan({{51, true}}, SelectionRule::kBestItem, v[1]),
      al::RoundSchedulePlan({{0, false}, {0, true}, {0, false}}, SelectionRule::kBestItem, v[2]),
  };
}

}  // namespace

TEST_CASE("the inefficient three-by-three outcome") {
  auto v = Matrix();
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 3, 3);
  al::Outcome o = al::RunAuction(config, LowerProfile(v));
  REQUIRE(o.transcript.size() == 3);
  CHECK(o.transcript[0].winner == 1);
  CHECK(o.transcript[0].bid == Bid{51, true});
  CHECK(o.transcript[1].winner == 2);
  CHECK(o.transcript[2].winner == 0);
  CHECK(o.allocation.bundles[0] == ItemSet{0});
  CHECK(o.allocation.bundles[1] == ItemSet{2});
  CHECK(o.allocation.bundles[2] == ItemSet{1});
  CHECK(o.payments == std::vector<Rational>{0, 51, 0});
  CHECK(al::OutcomeWelfare(o, v) == 171);
  CHECK(al::Revenue(o) == 51);
  CHECK(al::Utility(o, 1, v[1]) == 46);
  Rational prices = 0;
  for (const auto& p : o.item_prices) prices += p;
  CHECK(prices == al::Revenue(o));
}

TEST_CASE("a scripted replay reproduces the outcome") {
  auto v = Matrix();
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 3, 3);
  al::Profile original = LowerProfile(v);
  al::Outcome o = al::RunAuction(config, original);
  al::Profile scripted;
  for (int i = 0; i < 3; ++i) {
    std::map<std::string, al::Action> table;
    for (int k = 0; k < o.history.round(); ++k) {
      al::History h = o.history.Prefix(k);
      table[h.Key()] = original[i]->Act(h, i);
    }
    scripted.push_back(al::ScriptedPlan(std::move(table)));
  }
  for (int rep = 0; rep < 2; ++rep) {
    al::Outcome r = al::RunAuction(config, scripted);
    CHECK(r.allocation == o.allocation);
    CHECK(r.payments == o.payments);
    CHECK(al::ExportTranscript(r) == al::ExportTranscript(o));
  }
}

TEST_CASE("a lone bidder bidding 0 takes everything for free") {
  Valuation v = Valuation::Additive({1, 2, 3});
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 1, 3);
  al::Outcome o =
      al::RunAuction(config, {al::ConstantBidPlan({0, false}, SelectionRule::kAllOffered, v)});
  CHECK(o.allocation.bundles[0] == ItemSet::All(3));
  CHECK(o.payments[0] == 0);
}

TEST_CASE("everyone bidding eps+ in the four-bidder example") {
  Rational alpha = 1, eps(1, 100);
  std::vector<Valuation> v{UD({eps, 0, 0}), UD({alpha, alpha, 0}), UD({0, alpha, alpha}),
                           UD({0, 0, Rational(alpha - eps)})};
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 4, 3);
  al::Profile p{al::ConstantBidPlan({0, false}, SelectionRule::kBestItemAlways, v[0])};
  for (int i = 1; i < 4; ++i) {
    p.push_back(al::ConstantBidPlan({eps, true}, SelectionRule::kBestItem, v[i]));
  }
  al::Outcome o = al::RunAuction(config, p);
  CHECK(o.allocation.bundles[1] == ItemSet{0});
  CHECK(o.allocation.bundles[2] == ItemSet{1});
  CHECK(o.allocation.bundles[3] == ItemSet{2});
  CHECK(al::OutcomeWelfare(o, v) == 3 * alpha - eps);
}

TEST_CASE("a zero bid never beats a positive bid") {
  Valuation v = UD({5, 5});
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 2);
  al::Outcome o = al::RunAuction(
      config, {al::ConstantBidPlan({0, true}, SelectionRule::kBestItem, v),
               al::ConstantBidPlan({Rational(1, 100), false}, SelectionRule::kAllOffered, v)});
  CHECK(o.allocation.bundles[0].empty());
  CHECK(al::Utility(o, 0, v) == 0);
}

TEST_CASE("ties go to the earliest bidder in the tie order") {
  Valuation v = UD({1});
  for (std::vector<int> order : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
    auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 1);
    config.tie_break = order;
    al::Profile p{al::ConstantBidPlan({1, false}, SelectionRule::kBestItem, v),
                  al::ConstantBidPlan({1, false}, SelectionRule::kBestItem, v)};
    CHECK(al::RunAuction(config, p).transcript[0].winner == order[0]);
  }
}

TEST_CASE("overpaying gives negative utility") {
  Valuation v = UD({1});
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 1, 1);
  al::Outcome o =
      al::RunAuction(config, {al::ConstantBidPlan({3, false}, SelectionRule::kAllOffered, v)});
  CHECK(al::Utility(o, 0, v) == -2);
}

TEST_CASE("single-item draft: each win takes one item") {
  Valuation v = Valuation::Additive({1, 1, 1});
  auto config = al::MechanismConfig::Make(MechanismKind::kSingleItemDraft, 1, 3);
  al::Outcome o =
      al::RunAuction(config, {al::ConstantBidPlan({0, false}, SelectionRule::kAllOffered, v)});
  CHECK(o.transcript.size() == 3);
  for (const auto& r : o.transcript) CHECK(r.bundle.size() == 1);
}

TEST_CASE("sequential rounds nobody bids on go unsold") {
  Valuation v = UD({0, 4});
  auto config = al::MechanismConfig::Make(MechanismKind::kSequentialItem, 1, 2);
  config.item_order = {0, 1};
  al::Outcome o =
      al::RunAuction(config, {al::ConstantBidPlan({1, false}, SelectionRule::kBestItem, v)});
  REQUIRE(o.transcript.size() == 2);
  CHECK(o.transcript[0].winner == -1);
  CHECK(o.transcript[1].winner == 0);
  CHECK(o.item_prices[0] == 0);
  CHECK(o.item_prices[1] == 1);
  CHECK_FALSE(o.sold.contains(0));
}

TEST_CASE("draft auction ends when everyone abstains") {
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 2);
  al::Outcome o = al::RunAuction(config, {al::DropOutPlan(), al::DropOutPlan()});
  CHECK(o.transcript.empty());
  CHECK(al::Revenue(o) == 0);
}
