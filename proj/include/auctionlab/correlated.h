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

#ifndef AUCTIONLAB_CORRELATED_H_
#define AUCTIONLAB_CORRELATED_H_

#include <string>
#include <vector>

#include "auctionlab/grid.h"
#include "auctionlab/nash.h"

namespace auctionlab {

struct WeightedProfile {
  Profile profile;
  Rational weight;
};

// A finite distribution over pure profiles. Plans are compared by identity,
// so the same suggestion must be the same PlanPtr across profiles.
using ProfileDistribution = std::vector<WeightedProfile>;

struct CorrelatedCheck {
  bool is_equilibrium = true;
  int bidder = -1;
  PlanPtr suggested;
  PlanPtr replacement;
  Rational gain;  // expected gain, weighted by the suggestion's probability

  std::string ToString() const;
};

// For every bidder and every suggestion with positive probability, no plan
// of the bidder's plan space raises the expected utility over the profiles
// carrying that suggestion. Throws std::invalid_argument unless weights are
// nonnegative and sum to 1.
CorrelatedCheck VerifyCorrelatedEquilibrium(const GameInstance& instance,
                                            const ProfileDistribution& dist);

// Reports every support profile with its welfare; poa and pos compare OPT
// with the expected welfare.
EquilibriumReport CorrelatedReport(const GameInstance& instance,
                                   const ProfileDistribution& dist);

}  // namespace auctionlab

#endif  // AUCTIONLAB_CORRELATED_H_
