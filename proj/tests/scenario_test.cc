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

#include <filesystem>

#include "auctionlab/corpus.h"
#include "auctionlab/engine.h"
#include "auctionlab/scenario.h"
#include "auctionlab/spe.h"
#include "auctionlab/sweep.h"
#include "doctest.h"

namespace al = auctionlab;
using al::Rational;

namespace {

std::string Golden(const std::string& name) {
  return (std::filesystem::path(al::DefaultScenarioDir()) / (name + ".scn")).string();
}

const char* kSmall = R"(
[mechanism]
kind = sequential
bidders = 2
items = 2
order = 1 0   # second item first
tie_break = 1 0

[valuations]
0 = additive 1 1/2
1 = unit_demand 3/4 1/4

[plans]
grid = 0, 1/4, 1/4+, 1/2
rules = best_item all
profile.0 = constant 1/4+ all
profile.1 = schedule 1/4 1/2 best_item

[experiment]
directive = run
seed = 9
param.note = x
)";

}  // namespace

TEST_CASE("the golden three-by-three file") {
  al::Scenario s = al::LoadScenario(Golden("lower_209_171"));
  CHECK(s.config.num_bidders == 3);
  CHECK(s.config.num_items == 3);
  CHECK(s.valuations[0].ToString() == "unit_demand 32 31 83");
  CHECK(s.valuations[1].ToString() == "unit_demand 9 84 97");
  CHECK(s.valuations[2].ToString() == "unit_demand 2 42 93");
  CHECK(s.plans.grid->size() == 202);
  CHECK(s.plans.pinned_supporters.at(al::SpeRootKey(s.config)) == 0);
}

TEST_CASE("every corpus entry loads") {
  for (const auto& name : al::CorpusNames()) CHECK_NOTHROW(al::LoadScenario(Golden(name)));
}

TEST_CASE("malformed scenarios are rejected with a location") {
  CHECK_THROWS_AS(al::ParseScenario(""), al::ScenarioError);
  const char* wrong_m = "[mechanism]\nbidders = 1\nitems = 2\n[valuations]\n0 = unit_demand 1\n";
  CHECK_THROWS_AS(al::ParseScenario(wrong_m), al::ScenarioError);
  try {
    al::ParseScenario("[mechanism]\nbidders = 1\nitems = x\n", "f.scn");
    FAIL("no error");
  } catch (const al::ScenarioError& e) {
    CHECK(std::string(e.what()).rfind("f.scn:3:", 0) == 0);
  }
  CHECK_THROWS_AS(al::ParseScenario("[bogus]\n"), al::ScenarioError);
  CHECK_THROWS_AS(al::LoadScenario("/nonexistent/x.scn"), al::ScenarioError);
}

TEST_CASE("serialize then parse is stable and replays identically") {
  al::Scenario s = al::ParseScenario(kSmall);
  CHECK(s.config.item_order == std::vector<int>{1, 0});
  CHECK(s.experiment.seed == 9);
  CHECK(s.experiment.params.at("note") == "x");
  std::string text = al::SerializeScenario(s);
  al::Scenario t = al::ParseScenario(text);
  CHECK(al::SerializeScenario(t) == text);

  al::Outcome a = al::RunAuction(s.config, al::BuildProfile(s), s.experiment.seed);
  al::Outcome b = al::RunAuction(t.config, al::BuildProfile(t), t.experiment.seed);
  CHECK(al::ExportTranscript(a) == al::ExportTranscript(b));

  al::Scenario g = al::LoadScenario(Golden("intro_3_2"));
  CHECK(al::SerializeScenario(al::ParseScenario(al::SerializeScenario(g))) ==
        al::SerializeScenario(g));
}

TEST_CASE("uniform grid shorthand") {
  al::BidGrid g = al::BidGrid::Parse("uniform 1/2 1 plus nozero_plus");
  CHECK(g.ToString() == "0,1/2,1/2+,1,1+");
  CHECK_THROWS(al::BidGrid::Parse("uniform 1/2"));
  CHECK_THROWS(al::BidGrid::Parse("uniform 1/2 1 sideways"));
}

TEST_CASE("reproduce") {
  CHECK_THROWS_AS(al::Reproduce("nope"), std::invalid_argument);
  al::ReproduceReport r = al::Reproduce("non_unique");
  CHECK(r.ok());
  CHECK(r.ToString().find("expected") != std::string::npos);
}

TEST_CASE("intro scenario builder matches the golden file") {
  al::Scenario built = al::IntroScenario(1, Rational(1, 100));
  al::Scenario golden = al::LoadScenario(Golden("intro_3_2"));
  for (int i = 0; i < 4; ++i) {
    CHECK(built.valuations[i].ToString() == golden.valuations[i].ToString());
  }
  CHECK(built.plans.grid->ToString() == golden.plans.grid->ToString());
  CHECK(al::ReproduceIntro(built).ok());
}

TEST_CASE("sweeps are deterministic and single-item sweeps are efficient") {
  al::SweepOptions o;
  o.m = 1;
  o.instances = 5;
  o.step = Rational(1, 4);
  o.den = 4;
  o.seed = 4;
  auto rows = al::RunSweep(o);
  CHECK(al::SweepCsv(rows) == al::SweepCsv(al::RunSweep(o)));
  for (const auto& r : rows) {
    if (r.poa) CHECK(*r.poa == 1);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->holds);
  }
  CHECK(al::SweepCsv(rows).rfind("# auctionlab sweep v1\n", 0) == 0);
}
