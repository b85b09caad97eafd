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

#include <random>
#include <sstream>
#include <stdexcept>

#include "auctionlab/errors.h"

namespace auctionlab {

Outcome RunAuction(const MechanismConfig& config, const Profile& plans,
                   std::optional<uint64_t> seed) {
  config.Validate();
  const int n = config.num_bidders;
  const int m = config.num_items;
  if (static_cast<int>(plans.size()) != n) {
    throw std::invalid_argument("run_auction: need one plan per bidder");
  }

  Profile pure = plans;
  std::mt19937_64 rng(seed.value_or(0));
  for (auto& p : pure) {
    if (!p) throw std::invalid_argument("run_auction: null plan");
    while (PlanPtr drawn = p->Resolve(rng)) p = drawn;
  }

  std::vector<int> rank(n);
  for (int r = 0; r < n; ++r) rank[config.tie_break[r]] = r;

  Outcome out{.transcript = {},
              .allocation = Allocation{std::vector<ItemSet>(n)},
              .payments = std::vector<Rational>(n, Rational(0)),
              .item_prices = std::vector<Rational>(m, Rational(0)),
              .sold = ItemSet(),
              .history = History(config)};
  History& history = out.history;
  const int round_cap = 2 * m;

  std::vector<Action> actions(n);
  while (!history.Finished()) {
    if (history.round() >= round_cap) {
      throw std::runtime_error("run_auction: round cap 2m exceeded");
    }
    const ItemSet offered = history.Offered();
    const int max_pick = history.MaxPick();
    int winner = -1;
    for (int i = 0; i < n; ++i) {
      actions[i] = pure[i]->Act(history, i);
      const Action& a = actions[i];
      if (a.abstains()) continue;
      if (!a.demand.IsSubsetOf(offered)) {
        throw MalformedPlan("bidder " + std::to_string(i) + " demanded " +
                            a.demand.ToString() + " outside offered " +
                            offered.ToString() + " (" + pure[i]->Describe() + ")");
      }
      if (max_pick > 0 && a.demand.size() > max_pick) {
        throw MalformedPlan("bidder " + std::to_string(i) +
                            " demanded more than the pick limit");
      }
      if (a.bid.amount < 0) throw MalformedPlan("negative bid");
      if (winner < 0 || a.bid > actions[winner].bid ||
          (a.bid == actions[winner].bid && rank[i] < rank[winner])) {
        winner = i;
      }
    }

    RoundRecord rec;
    rec.round = history.round();
    if (winner < 0) {
      if (config.kind != MechanismKind::kSequentialItem) break;
      rec.winner = -1;
      out.transcript.push_back(rec);
      history.Append(Announcement{-1, Bid{}, ItemSet()});
      continue;
    }
    const Action& a = actions[winner];
    rec.winner = winner;
    rec.bid = a.bid;
    rec.bundle = a.demand;
    rec.price = a.bid.amount * a.demand.size();
    out.transcript.push_back(rec);
    out.allocation.bundles[winner] = out.allocation.bundles[winner] | a.demand;
    out.payments[winner] += rec.price;
    for (int j : a.demand.Members()) out.item_prices[j] = a.bid.amount;
    out.sold = out.sold | a.demand;
    history.Append(Announcement{winner, a.bid, a.demand});
  }
  return out;
}

Rational Utility(const Outcome& outcome, int bidder, const Valuation& v) {
  return v.Value(outcome.allocation.bundles.at(bidder)) - outcome.payments.at(bidder);
}

Rational Revenue(const Outcome& outcome) {
  Rational total = 0;
  for (const auto& p : outcome.payments) total += p;
  return total;
}

Rational OutcomeWelfare(const Outcome& outcome,
                        const std::vector<Valuation>& profile) {
  return Welfare(profile, outcome.allocation);
}

std::string ExportTranscript(const Outcome& outcome) {
  std::ostringstream os;
  for (const auto& r : outcome.transcript) {
    os << r.round << ' ' << r.winner << ' ' << ToString(r.bid.amount) << ' '
       << (r.bid.plus ? 1 : 0) << ' ' << r.bundle.bits() << ' '
       << ToString(r.price) << '\n';
  }
  return os.str();
}

}  // namespace auctionlab
