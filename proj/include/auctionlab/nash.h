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

#ifndef AUCTIONLAB_NASH_H_
#define AUCTIONLAB_NASH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auctionlab/engine.h"
#include "auctionlab/grid.h"

namespace auctionlab {

enum class DeviationScope {
  kPlanSpace,         // alternatives are the bidder's candidate plans
  kHistoryContingent  // every plan that maps histories to grid bids
};

struct NashOptions {
  DeviationScope scope = DeviationScope::kHistoryContingent;
  // Deviating wins must satisfy amount * |X| <= marginal value of X.
  bool undominated = false;
  // Search nodes per best-response query before CapExceeded.
  uint64_t node_cap = 50'000'000;
};

struct DeviationWitness {
  int bidder = -1;
  PlanPtr plan;
  Rational baseline;  // utility under the profile
  Rational improved;  // utility after switching to `plan`

  std::string ToString() const;
};

struct NashResult {
  bool is_nash = true;
  std::optional<DeviationWitness> witness;
};

// A best response over history-contingent grid plans. `plan` is scripted on
// the path it induces and abstains elsewhere, so RunAuction reproduces
// `utility` exactly.
struct BestResponse {
  Rational utility;
  PlanPtr plan;
  uint64_t nodes = 0;
};

// Exhaustive search over the deviation tree of `bidder`. With `improve_on`,
// returns the first plan found with utility strictly above it, or nullopt.
// Without it, returns a utility-maximizing plan.
std::optional<BestResponse> FindBestResponse(
    const GameInstance& instance, const Profile& profile, int bidder,
    const NashOptions& options = {},
    std::optional<Rational> improve_on = std::nullopt);

// Throws std::invalid_argument for mixed plans in `profile`.
NashResult IsPureNash(const GameInstance& instance, const Profile& profile,
                      const NashOptions& options = {});

enum class EquilibriumKind { kPureNash, kSpe, kCorrelated };

std::string EquilibriumKindName(EquilibriumKind kind);

struct EquilibriumEntry {
  std::string id;
  Profile profile;
  Outcome outcome;
  Rational welfare;
  Rational revenue;
};

struct EquilibriumReport {
  EquilibriumKind kind = EquilibriumKind::kPureNash;
  std::vector<EquilibriumEntry> equilibria;
  Rational opt_welfare;
  uint64_t profiles_checked = 0;
  // OPT / min welfare and OPT / max welfare; empty with no equilibria or
  // when the relevant welfare is zero while OPT is positive.
  std::optional<Rational> poa;
  std::optional<Rational> pos;
  std::string note;

  // Fills poa and pos from the entries.
  void Summarize();
  bool found() const { return !equilibria.empty(); }

  // One row per equilibrium: profile_id,welfare,revenue,opt,ratio,ratio_decimal.
  std::string ToCsv() const;
  std::string ToString() const;
};

inline constexpr uint64_t kDefaultProfileCap = 1'000'000;

// Checks every candidate profile. Throws CapExceeded past `cap` profiles.
EquilibriumReport EnumeratePureNash(const GameInstance& instance,
                                    const NashOptions& options = {},
                                    uint64_t cap = kDefaultProfileCap);

}  // namespace auctionlab

#endif  // AUCTIONLAB_NASH_H_
