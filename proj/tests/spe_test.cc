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
#include "auctionlab/errors.h"
#include "auctionlab/nash.h"
#include "auctionlab/spe.h"
#include "doctest.h"

namespace al = auctionlab;
using al::BidGrid;
using al::ItemSet;
using al::MechanismKind;
using al::Rational;
using al::Valuation;

namespace {

Valuation UD(std::vector<Rational> v) { return Valuation::UnitDemand(std::move(v)); }

std::vector<Valuation> Matrix() {
  return {UD({32, 31, 83}), UD({9, 84, 97}), UD({2, 42, 93})};
}

al::SpeOptions Options(const BidGrid& grid, bool undominated = false) {
  al::SpeOptions o;
  o.grid = grid;
  o.undominated = undominated;
  return o;
}

}  // namespace

TEST_CASE("one item, values 5 and 3") {
  std::vector<Valuation> v{UD({5}), UD({3})};
  // The lowest stable price sits one grid step below the low value.
  for (Rational step : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
    for (bool plus : {false, true}) {
      al::SpeResult r =
          al::SolveSpeSingleItemDraft(v, {0, 1}, Options(BidGrid::Uniform(step, 5, plus)));
      REQUIRE(r.solved);
      REQUIRE(r.path.size() == 1);
      CHECK(r.path[0].winner == 0);
      CHECK(r.path[0].supporter == 1);
      CHECK(r.path[0].price.amount == 3 - step);
      CHECK(r.predicted_welfare == 5);
      CHECK(r.report.equilibria[0].welfare == 5);
    }
  }
}

TEST_CASE("state keys") {
  CHECK(al::SpeStateKey(ItemSet{0, 2}, {ItemSet{1}, ItemSet()}) == "r{0,2}|{1}|{}");
  auto config = al::MechanismConfig::Make(MechanismKind::kSingleItemDraft, 3, 3);
  CHECK(al::SpeRootKey(config) == "r{0,1,2}|{}|{}|{}");
}

TEST_CASE("three-by-three matrix with A supporting round 1") {
  auto config = al::MechanismConfig::Make(MechanismKind::kSingleItemDraft, 3, 3);
  al::SpeOptions o = Options(BidGrid::Uniform(1, 100, true), true);
  o.pinned_supporters[al::SpeRootKey(config)] = 0;
  al::SpeResult r = al::SolveSpe(config, Matrix(), o);
  REQUIRE(r.solved);
  CHECK(r.path[0].winner == 1);
  CHECK(r.path[0].supporter == 0);
  CHECK(r.path[0].pick == ItemSet{2});
  CHECK(r.path[0].price.amount == 51);
  const auto& eq = r.report.equilibria.at(0);
  CHECK(eq.welfare == 171);
  CHECK(eq.revenue == 51);
  CHECK(*r.report.poa == al::Fraction(209, 171));

  al::Outcome replay = al::RunAuction(config, r.plans);
  CHECK(al::OutcomeWelfare(replay, Matrix()) == r.predicted_welfare);

  auto inst = al::MakeGridInstance(config, Matrix(), o.grid, o.grid, {al::SelectionRule::kBestItem});
  al::NashOptions nash;
  nash.undominated = true;
  CHECK(al::IsPureNash(inst, r.plans, nash).is_nash);
}

TEST_CASE("with C supporting round 1 there is no stage equilibrium") {
  auto config = al::MechanismConfig::Make(MechanismKind::kSingleItemDraft, 3, 3);
  al::SpeOptions o = Options(BidGrid::Uniform(1, 100, true), true);
  o.pinned_supporters[al::SpeRootKey(config)] = 2;
  al::SpeResult r = al::SolveSpe(config, Matrix(), o);
  CHECK_FALSE(r.solved);
  CHECK(r.report.note.find("no stage equilibrium") != std::string::npos);
}

TEST_CASE("sequential sale in the order A, C, B") {
  Rational alpha = 1, eps(1, 100);
  std::vector<Valuation> v{UD({eps, 0, 0}), UD({alpha, alpha, 0}), UD({0, alpha, alpha}),
                           UD({0, 0, Rational(alpha - eps)})};
  al::SpeResult r = al::SolveSpeSequential(v, {0, 2, 1}, {0, 1, 2, 3},
                                           Options(BidGrid::Uniform(eps, 1, true, false), true));
  REQUIRE(r.solved);
  CHECK(r.predicted_welfare == 2 * alpha + eps);
  CHECK(r.report.equilibria[0].welfare == 2 * alpha + eps);
}

TEST_CASE("the draft format has no stage solver") {
  auto config = al::MechanismConfig::Make(MechanismKind::kDraft, 2, 1);
  CHECK_THROWS(al::SolveSpe(config, {UD({1}), UD({1})}, Options(BidGrid::Uniform(1, 1, false))));
}

TEST_CASE("state cap") {
  auto config = al::MechanismConfig::Make(MechanismKind::kSingleItemDraft, 3, 3);
  al::SpeOptions o = Options(BidGrid::Uniform(1, 100, true));
  o.state_cap = 2;
  CHECK_THROWS_AS(al::SolveSpe(config, Matrix(), o), al::CapExceeded);
}

TEST_CASE("enumeration over plan spaces holding the subgame-perfect plans") {
  auto config = al::MechanismConfig::Make(MechanismKind::kSingleItemDraft, 3, 3);
  al::SpeOptions o = Options(BidGrid::Uniform(1, 100, true), true);
  o.pinned_supporters[al::SpeRootKey(config)] = 0;
  al::SpeResult r = al::SolveSpe(config, Matrix(), o);
  REQUIRE(r.solved);
  auto inst = al::MakeGridInstance(config, Matrix(), o.grid, o.grid, {al::SelectionRule::kBestItem});
  for (int i = 0; i < 3; ++i) inst.plan_spaces[i] = {r.plans[i]};
  al::NashOptions nash;
  nash.undominated = true;
  al::EquilibriumReport report = al::EnumeratePureNash(inst, nash);
  REQUIRE(report.found());
  CHECK(report.equilibria[0].welfare == 171);
  CHECK(*report.poa == al::Fraction(209, 171));
}
