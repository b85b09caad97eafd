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

#ifndef AUCTIONLAB_SCENARIO_H_
#define AUCTIONLAB_SCENARIO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "auctionlab/grid.h"
#include "auctionlab/history.h"
#include "auctionlab/plans.h"
#include "auctionlab/smoothness.h"
#include "auctionlab/valuation.h"

namespace auctionlab {

// A parse or validation failure, with "origin:line: " prefixed when known.
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PlanSpec {
  std::optional<BidGrid> grid;            // candidate bids
  std::optional<BidGrid> deviation_grid;  // defaults to `grid`
  std::vector<SelectionRule> rules{SelectionRule::kBestItem};
  bool undominated = false;
  // Explicit plan per bidder, e.g. "constant 51+ best_item"; empty if none.
  std::vector<std::string> profile;
  std::map<std::string, int> pinned_supporters;
};

struct Experiment {
  std::string directive = "run";  // run|nash|spe|smoothness|approx|reproduce
  uint64_t seed = 0;
  Rational lambda{1, 2};
  Rational mu = 2;
  // unit_demand | core | via:concave_symmetric | via:additive | via:xos |
  // via:subadditive
  std::string family = "unit_demand";
  std::string approximator = "additive";
  std::optional<ItemSet> target;  // approx target; defaults to OPT bundles
  std::string name;               // reproduce target
  std::map<std::string, std::string> params;  // free-form, e.g. epsilon
};

struct Scenario {
  MechanismConfig config;
  std::vector<Valuation> valuations;
  PlanSpec plans;
  Experiment experiment;

  // Dimension agreement between sections. Throws ScenarioError.
  void Validate() const;
};

// Valuation text as produced by Valuation::ToString, e.g.
// "unit_demand 32 31 83" or "homogeneous 4 3/2 0 2".
Valuation ParseValuation(const std::string& text);

// "constant <bid> <rule> [preference items...]", "schedule <bid>... <rule>",
// "truthful", "drop_out".
PlanPtr ParsePlan(const std::string& text, const Valuation& v);

Scenario ParseScenario(const std::string& text,
                       const std::string& origin = "<scenario>");
Scenario LoadScenario(const std::string& path);
std::string SerializeScenario(const Scenario& s);

// Candidate plans from the grid and rules; requires plans.grid.
GameInstance BuildInstance(const Scenario& s);
// The explicit profile; requires plans.profile.
Profile BuildProfile(const Scenario& s);

Approximator ParseApproximator(const std::string& name);

}  // namespace auctionlab

#endif  // AUCTIONLAB_SCENARIO_H_
