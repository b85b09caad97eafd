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

#ifndef AUCTIONLAB_ENGINE_H_
#define AUCTIONLAB_ENGINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auctionlab/history.h"
#include "auctionlab/plans.h"
#include "auctionlab/valuation.h"

namespace auctionlab {

struct RoundRecord {
  int round = 0;
  int winner = -1;  // -1: nobody bid on a sequential round's item
  Bid bid;
  ItemSet bundle;
  Rational price;   // amount * |bundle|
};

struct Outcome {
  std::vector<RoundRecord> transcript;
  Allocation allocation;
  std::vector<Rational> payments;     // P_i
  std::vector<Rational> item_prices;  // p_j; 0 for unsold items
  ItemSet sold;
  History history;                    // final public history

  int num_bidders() const { return static_cast<int>(payments.size()); }
};

// Runs the configured mechanism. Mixed plans are resolved up front from a
// generator seeded with `seed` (0 when absent), in bidder order.
//
// Draft formats loop while items remain; bidders demanding nothing sit the
// round out, and a round where everyone sits out ends the auction with the
// rest unsold. The highest bid wins, ties going to the earlier bidder in
// config.tie_break; the winner takes its demand and pays amount per item.
// Sequential auctions offer one item per round in config.item_order.
//
// Throws MalformedPlan when a demand leaves the offered set or breaks the
// pick limit, and std::runtime_error past 2m rounds.
Outcome RunAuction(const MechanismConfig& config, const Profile& plans,
                   std::optional<uint64_t> seed = std::nullopt);

// v_i(S_i) - P_i.
Rational Utility(const Outcome& outcome, int bidder, const Valuation& v);
// Sum of payments.
Rational Revenue(const Outcome& outcome);
Rational OutcomeWelfare(const Outcome& outcome,
                        const std::vector<Valuation>& profile);

// One line per round: "t winner amount plus bundle_bitmask price".
std::string ExportTranscript(const Outcome& outcome);

}  // namespace auctionlab

#endif  // AUCTIONLAB_ENGINE_H_
