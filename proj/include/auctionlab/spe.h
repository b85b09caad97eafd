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

#ifndef AUCTIONLAB_SPE_H_
#define AUCTIONLAB_SPE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "auctionlab/grid.h"
#include "auctionlab/nash.h"

namespace auctionlab {

// Identifies a solver state: unsold (or not yet offered) items and what
// every bidder holds, e.g. "r{0,1,2}|{}|{}|{}".
std::string SpeStateKey(ItemSet remaining, const std::vector<ItemSet>& bundles);
std::string SpeRootKey(const MechanismConfig& config);

struct SpeOptions {
  BidGrid grid;
  // Forces the price supporter at the listed states (keys from SpeStateKey).
  std::map<std::string, int> pinned_supporters;
  // Winner and supporter bids may not exceed their marginal value for the
  // item they would pick.
  bool undominated = false;
  uint64_t state_cap = 1'000'000;
};

// What the stage game at one state resolved to.
struct SpeStage {
  int winner = -1;  // -1: everyone sits out
  Bid price;
  int supporter = -1;
  ItemSet pick;
};

struct SpeResult {
  bool solved = false;
  EquilibriumReport report;  // one entry: the equilibrium path
  // State-contingent plans; they answer any history, on or off the path.
  Profile plans;
  std::vector<SpeStage> path;
  Rational predicted_welfare;
  uint64_t states = 0;
};

// Backward induction for single-item drafts and sequential item auctions.
// Each stage is solved as a first-price auction with externalities over the
// grid: bidder i winning takes the offered item maximizing its own
// continuation, and candidates (winner, price, plus flag, supporter) are
// tried in order (winner by tie-break, lowest price, unmarked before plus,
// supporter by tie-break, then none) until one is an exact stage
// equilibrium. A state with no stage equilibrium leaves `solved` false and
// the reason in report.note.
SpeResult SolveSpe(const MechanismConfig& config,
                   const std::vector<Valuation>& valuations,
                   const SpeOptions& options);

SpeResult SolveSpeSingleItemDraft(const std::vector<Valuation>& valuations,
                                  const std::vector<int>& tie_break,
                                  const SpeOptions& options);

SpeResult SolveSpeSequential(const std::vector<Valuation>& valuations,
                             const std::vector<int>& item_order,
                             const std::vector<int>& tie_break,
                             const SpeOptions& options);

}  // namespace auctionlab

#endif  // AUCTIONLAB_SPE_H_
