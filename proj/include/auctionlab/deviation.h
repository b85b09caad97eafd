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

#ifndef AUCTIONLAB_DEVIATION_H_
#define AUCTIONLAB_DEVIATION_H_

#include "auctionlab/engine.h"
#include "auctionlab/plans.h"

namespace auctionlab {

// While `target_item` is unsold and the deviator has won nothing, bid the
// larger of the original plan's bid and target_value/2 and demand the target
// item; afterwards sit out. Where the original plan abstains, bid
// target_value/2 alone. Ties between the two bids count as the original's.
PlanPtr UnitDemandDeviation(PlanPtr original, int target_item,
                            Rational target_value);

// ceil(|S| / 2): the units the core deviation sets out to buy.
int CoreTargetUnits(ItemSet interest);

// The core deviation for a bidder with per-unit value `per_unit` on the
// units in `interest`. Each round, with u units of S already held and s*
// the target:
//   - once u >= s*, or fewer than s* - u units of S remain unsold, play the
//     original plan for the rest of the auction;
//   - otherwise bid max{per_unit/2, original bid}. If per_unit/2 is strictly
//     higher (or the original abstains), demand the s* - u lowest-index
//     remaining units and, on winning, sit out from then on; otherwise
//     demand exactly what the original demands.
PlanPtr CoreDeviation(PlanPtr original, ItemSet interest, Rational per_unit);

// First round the deviator won with an action that differs from what
// `original` plays on the same history, or -1. Up to that round the public
// history of the deviated run matches the original run.
int FirstDivergentWin(const Outcome& deviated, int self, const BidPlan& original);

}  // namespace auctionlab

#endif  // AUCTIONLAB_DEVIATION_H_
