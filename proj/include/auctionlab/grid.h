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

#ifndef AUCTIONLAB_GRID_H_
#define AUCTIONLAB_GRID_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "auctionlab/history.h"
#include "auctionlab/plans.h"
#include "auctionlab/valuation.h"

namespace auctionlab {

// A finite, sorted set of bids.
class BidGrid {
 public:
  BidGrid() = default;
  explicit BidGrid(std::vector<Bid> bids);

  // {0, step, 2 step, ..., max}; with_plus adds the plus-bid of every
  // point, except 0+ when zero_plus is false.
  static BidGrid Uniform(const Rational& step, const Rational& max,
                         bool with_plus, bool zero_plus = true);
  // Comma-separated bids, e.g. "0,1/100,1/100+,1/2,1", or
  // "uniform <step> <max> [plus] [nozero_plus]".
  static BidGrid Parse(const std::string& text);

  const std::vector<Bid>& bids() const { return bids_; }
  size_t size() const { return bids_.size(); }
  bool empty() const { return bids_.empty(); }
  bool Contains(const Bid& b) const;

  // Smallest grid bid that is >= b (or > b when strict).
  std::optional<Bid> LeastAbove(const Bid& b, bool strict) const;
  // Largest gap between consecutive distinct amounts.
  Rational Step() const;

  std::string ToString() const;

 private:
  std::vector<Bid> bids_;
};

struct GameInstance {
  MechanismConfig config;
  std::vector<Valuation> valuations;
  // Candidate plans per bidder; equilibria are searched among their product.
  std::vector<std::vector<PlanPtr>> plan_spaces;
  // Bids available to a deviating bidder.
  BidGrid grid;

  int num_bidders() const { return config.num_bidders; }

  // Throws std::invalid_argument on dimension mismatch, empty plan spaces
  // or an empty grid.
  void Validate() const;

  // Number of candidate profiles, saturating at UINT64_MAX.
  uint64_t ProfileCount() const;
};

// One ConstantBidPlan per grid bid and rule. With `undominated`, bids whose
// amount exceeds the bidder's best single-item value are left out.
std::vector<PlanPtr> ConstantPlanSpace(const BidGrid& grid, const Valuation& v,
                                       const std::vector<SelectionRule>& rules,
                                       bool undominated = false);

// Every bidder gets ConstantPlanSpace(candidate_grid, v_i, rules); the
// deviation grid is `grid`.
GameInstance MakeGridInstance(const MechanismConfig& config,
                              std::vector<Valuation> valuations,
                              const BidGrid& candidate_grid,
                              const BidGrid& grid,
                              const std::vector<SelectionRule>& rules,
                              bool undominated = false);

// Visits the product of plan spaces in odometer order (last bidder fastest).
// Throws CapExceeded if the product exceeds `cap`.
void ForEachProfile(const GameInstance& instance, uint64_t cap,
                    const std::function<void(const Profile&,
                                             const std::vector<size_t>&)>& fn);

}  // namespace auctionlab

#endif  // AUCTIONLAB_GRID_H_
