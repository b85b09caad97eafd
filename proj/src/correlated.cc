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

#include "auctionlab/correlated.h"

#include <map>
#include <stdexcept>

namespace auctionlab {

namespace {

void RequireNormalized(const GameInstance& g, const ProfileDistribution& dist) {
  if (dist.empty()) throw std::invalid_argument("empty distribution");
  Rational total = 0;
  for (const auto& wp : dist) {
    if (wp.weight < 0) throw std::invalid_argument("negative probability");
    if (static_cast<int>(wp.profile.size()) != g.num_bidders()) {
      throw std::invalid_argument("profile size does not match bidders");
    }
    total += wp.weight;
  }
  if (total != 1) {
    throw std::invalid_argument("distribution sums to " + ToString(total) + ", not 1");
  }
}

}  // namespace

std::string CorrelatedCheck::ToString() const {
  if (is_equilibrium) return "correlated equilibrium";
  return "bidder " + std::to_string(bidder) + " told '" +
         (suggested ? suggested->Describe() : "?") + "' gains " +
         auctionlab::ToString(gain) + " by playing '" +
         (replacement ? replacement->Describe() : "?") + "'";
}

CorrelatedCheck VerifyCorrelatedEquilibrium(const GameInstance& instance,
                                            const ProfileDistribution& dist) {
  instance.Validate();
  RequireNormalized(instance, dist);
  CorrelatedCheck check;
  for (int i = 0; i < instance.num_bidders(); ++i) {
    const Valuation& v = instance.valuations[i];
    std::map<const BidPlan*, std::vector<size_t>> by_suggestion;
    for (size_t k = 0; k < dist.size(); ++k) {
      if (dist[k].weight > 0) by_suggestion[dist[k].profile[i].get()].push_back(k);
    }
    for (const auto& [suggested, support] : by_suggestion) {
      Rational base = 0;
      for (size_t k : support) {
        base += dist[k].weight *
                Utility(RunAuction(instance.config, dist[k].profile), i, v);
      }
      for (const auto& alt : instance.plan_spaces[i]) {
        Rational value = 0;
        for (size_t k : support) {
          Profile deviated = dist[k].profile;
          deviated[i] = alt;
          value += dist[k].weight * Utility(RunAuction(instance.config, deviated), i, v);
        }
        if (value > base) {
          check.is_equilibrium = false;
          check.bidder = i;
          check.suggested = dist[support.front()].profile[i];
          check.replacement = alt;
          check.gain = value - base;
          return check;
        }
      }
    }
  }
  return check;
}

EquilibriumReport CorrelatedReport(const GameInstance& instance,
                                   const ProfileDistribution& dist) {
  instance.Validate();
  RequireNormalized(instance, dist);
  EquilibriumReport report;
  report.kind = EquilibriumKind::kCorrelated;
  report.opt_welfare = OptimalWelfare(instance.valuations).welfare;
  Rational expected = 0;
  for (size_t k = 0; k < dist.size(); ++k) {
    Outcome outcome = RunAuction(instance.config, dist[k].profile);
    Rational welfare = OutcomeWelfare(outcome, instance.valuations);
    Rational revenue = Revenue(outcome);
    expected += dist[k].weight * welfare;
    report.equilibria.push_back({"support" + std::to_string(k), dist[k].profile,
                                 std::move(outcome), std::move(welfare),
                                 std::move(revenue)});
  }
  report.profiles_checked = dist.size();
  if (expected > 0) {
    report.poa = report.pos = Rational(report.opt_welfare / expected);
  } else if (report.opt_welfare == 0) {
    report.poa = report.pos = Rational(1);
  }
  report.note = "expected welfare " + ToString(expected);
  return report;
}

}  // namespace auctionlab
