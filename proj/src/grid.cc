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

#include "auctionlab/grid.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "auctionlab/errors.h"

namespace auctionlab {

BidGrid::BidGrid(std::vector<Bid> bids) : bids_(std::move(bids)) {
  for (const Bid& b : bids_) {
    if (b.amount < 0) throw std::invalid_argument("negative grid bid");
  }
  std::sort(bids_.begin(), bids_.end());
  bids_.erase(std::unique(bids_.begin(), bids_.end()), bids_.end());
}

BidGrid BidGrid::Uniform(const Rational& step, const Rational& max,
                         bool with_plus, bool zero_plus) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  if (max < 0) throw std::invalid_argument("grid maximum must be nonnegative");
  std::vector<Bid> bids;
  for (Rational a = 0; a <= max; a += step) {
    bids.push_back({a, false});
    if (with_plus && (zero_plus || a != 0)) bids.push_back({a, true});
  }
  return BidGrid(std::move(bids));
}

BidGrid BidGrid::Parse(const std::string& text) {
  // "uniform <step> <max> [plus] [nozero_plus]"
  {
    std::istringstream words(text);
    std::string head;
    if (words >> head && head == "uniform") {
      std::string step, max, flag;
      if (!(words >> step >> max)) {
        throw std::invalid_argument("uniform grid expects <step> <max>");
      }
      bool plus = false, zero_plus = true;
      while (words >> flag) {
        if (flag == "plus") plus = true;
        else if (flag == "nozero_plus") zero_plus = false;
        else throw std::invalid_argument("unknown uniform grid flag '" + flag + "'");
      }
      return Uniform(ParseRational(step), ParseRational(max), plus, zero_plus);
    }
  }
  std::vector<Bid> bids;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    bids.push_back(ParseBid(token));
  }
  if (bids.empty()) throw std::invalid_argument("empty bid grid");
  return BidGrid(std::move(bids));
}

bool BidGrid::Contains(const Bid& b) const {
  return std::binary_search(bids_.begin(), bids_.end(), b);
}

std::optional<Bid> BidGrid::LeastAbove(const Bid& b, bool strict) const {
  auto it = strict ? std::upper_bound(bids_.begin(), bids_.end(), b)
                   : std::lower_bound(bids_.begin(), bids_.end(), b);
  if (it == bids_.end()) return std::nullopt;
  return *it;
}

Rational BidGrid::Step() const {
  Rational step = 0;
  for (size_t k = 1; k < bids_.size(); ++k) {
    step = std::max<Rational>(step, bids_[k].amount - bids_[k - 1].amount);
  }
  return step;
}

std::string BidGrid::ToString() const {
  std::string s;
  for (const Bid& b : bids_) {
    if (!s.empty()) s += ",";
    s += b.ToString();
  }
  return s;
}

void GameInstance::Validate() const {
  config.Validate();
  const int n = config.num_bidders;
  if (static_cast<int>(valuations.size()) != n) {
    throw std::invalid_argument("valuation count does not match bidders");
  }
  for (const auto& v : valuations) {
    if (v.num_items() != config.num_items) {
      throw std::invalid_argument("valuation item count does not match mechanism");
    }
  }
  if (static_cast<int>(plan_spaces.size()) != n) {
    throw std::invalid_argument("plan space count does not match bidders");
  }
  for (const auto& space : plan_spaces) {
    if (space.empty()) throw std::invalid_argument("empty plan space");
  }
  if (grid.empty()) throw std::invalid_argument("empty deviation grid");
}

uint64_t GameInstance::ProfileCount() const {
  uint64_t count = 1;
  for (const auto& space : plan_spaces) {
    if (space.empty()) return 0;
    if (count > std::numeric_limits<uint64_t>::max() / space.size()) {
      return std::numeric_limits<uint64_t>::max();
    }
    count *= space.size();
  }
  return count;
}

std::vector<PlanPtr> ConstantPlanSpace(const BidGrid& grid, const Valuation& v,
                                       const std::vector<SelectionRule>& rules,
                                       bool undominated) {
  Rational best_single = 0;
  for (int j = 0; j < v.num_items(); ++j) {
    best_single = std::max<Rational>(best_single, v.Value(ItemSet::Single(j)));
  }
  std::vector<PlanPtr> space;
  for (SelectionRule rule : rules) {
    for (const Bid& b : grid.bids()) {
      if (undominated && b.amount > best_single) continue;
      space.push_back(ConstantBidPlan(b, rule, v));
    }
  }
  return space;
}

GameInstance MakeGridInstance(const MechanismConfig& config,
                              std::vector<Valuation> valuations,
                              const BidGrid& candidate_grid, const BidGrid& grid,
                              const std::vector<SelectionRule>& rules,
                              bool undominated) {
  GameInstance g;
  g.config = config;
  g.grid = grid;
  for (const auto& v : valuations) {
    g.plan_spaces.push_back(ConstantPlanSpace(candidate_grid, v, rules, undominated));
  }
  g.valuations = std::move(valuations);
  g.Validate();
  return g;
}

void ForEachProfile(const GameInstance& instance, uint64_t cap,
                    const std::function<void(const Profile&,
                                             const std::vector<size_t>&)>& fn) {
  const uint64_t count = instance.ProfileCount();
  if (count > cap) {
    throw CapExceeded("profile count " + std::to_string(count) +
                      " exceeds cap " + std::to_string(cap));
  }
  const size_t n = instance.plan_spaces.size();
  std::vector<size_t> index(n, 0);
  Profile profile(n);
  for (size_t i = 0; i < n; ++i) profile[i] = instance.plan_spaces[i][0];
  for (uint64_t k = 0; k < count; ++k) {
    fn(profile, index);
    for (size_t i = n; i-- > 0;) {
      if (++index[i] < instance.plan_spaces[i].size()) {
        profile[i] = instance.plan_spaces[i][index[i]];
        break;
      }
      index[i] = 0;
      profile[i] = instance.plan_spaces[i][0];
    }
  }
}

}  // namespace auctionlab
