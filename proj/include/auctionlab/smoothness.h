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

#ifndef AUCTIONLAB_SMOOTHNESS_H_
#define AUCTIONLAB_SMOOTHNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "auctionlab/approx.h"
#include "auctionlab/deviation.h"
#include "auctionlab/engine.h"
#include "auctionlab/grid.h"

namespace auctionlab {

// Builds a bidder's deviation from its own valuation, its bundle in the
// welfare optimum and its original plan. Nothing about opponents is passed.
using DeviationBuilder = std::function<PlanPtr(
    int bidder, const Valuation& v, ItemSet opt_bundle, PlanPtr original)>;

struct DeviationFamily {
  std::string id;
  DeviationBuilder build;
};

// Unit-demand: target the best item of the optimal bundle.
DeviationFamily UnitDemandFamily();
// Constraint-homogeneous: core deviation on S intersected with the optimal
// bundle.
DeviationFamily CoreFamily();

struct ProfileDomain {
  // Exhaustive when the profile count is at most exhaustive_cap, otherwise
  // `samples` profiles drawn uniformly with `seed`.
  uint64_t exhaustive_cap = 100'000;
  uint64_t samples = 10'000;
  uint64_t seed = 0;
  // Refuse to sample: throw CapExceeded instead.
  bool require_exhaustive = false;
};

struct SmoothnessCertificate {
  Rational lambda;
  Rational mu;
  std::string family;
  std::string domain;
  uint64_t profiles_checked = 0;
  bool exhaustive = true;
  bool holds = true;
  // min over checked profiles of sum_i u_i(b'_i, b_-i) - lambda OPT + mu sum_i P_i(b)
  Rational worst_margin;
  std::optional<Profile> counterexample;  // the worst profile when it fails
  std::optional<Profile> counterexample_deviations;

  std::string ToString() const;
};

// Margin of one profile: runs b, then (b'_i, b_-i) for every bidder.
Rational SmoothnessMargin(const MechanismConfig& config,
                          const std::vector<Valuation>& valuations,
                          const Allocation& optimum, const Profile& profile,
                          const std::vector<PlanPtr>& deviations,
                          const Rational& lambda, const Rational& mu);

SmoothnessCertificate CheckSmoothness(const GameInstance& instance,
                                      const DeviationFamily& family,
                                      const Rational& lambda, const Rational& mu,
                                      const ProfileDomain& domain = {});

enum class Approximator {
  kConcaveSymmetric,  // concave symmetric -> constraint-homogeneous
  kAdditive,          // additive -> constraint-homogeneous by bucketing
  kXos,               // XOS -> additive -> constraint-homogeneous
  kSubadditive,       // subadditive table -> additive (LP) -> homogeneous
};

std::string ApproximatorName(Approximator a);

// Surrogate for one bidder and target set, composed down to a
// constraint-homogeneous valuation; beta multiplies along the chain.
ApproxResult ApproximateToHomogeneous(Approximator a, const Valuation& v,
                                      ItemSet target);

// The class-wide beta for m items: 1, BucketingBeta(m), BucketingBeta(m),
// H_m * BucketingBeta(m). BucketingBeta uses a lower bound on log2, so the
// derived lambda = base / beta errs high and the check errs strict.
Rational ClassBeta(Approximator a, int m);

// Builds v'_i for each bidder's optimal bundle, deviates with the core
// deviation for v'_i, and checks the inequality for the true valuations at
// (base_lambda / ClassBeta, mu). Asserts per bidder that beta_i <= ClassBeta,
// per instance that ClassBeta * OPT(v') >= OPT(v), and per deviation run
// that u_i(.; v_i) >= u_i(.; v'_i); a failure throws GuaranteeViolated.
SmoothnessCertificate CheckSmoothnessViaExtension(
    const GameInstance& instance, Approximator approximator,
    const Rational& base_lambda, const Rational& mu,
    const ProfileDomain& domain = {});

// max{1, mu} / lambda. Throws std::invalid_argument unless lambda > 0.
Rational PoaBound(const Rational& lambda, const Rational& mu);

struct PaymentIdentity {
  bool prices_match_payments = false;  // sum_j p_j == sum_i P_i
  // sum_i sum_{j in S*_i} p_j == sum_j p_j; empty when the optimum leaves
  // an item unassigned.
  std::optional<bool> optimum_reindexes;
  std::string notice;
};
PaymentIdentity CheckPaymentIdentity(const Outcome& outcome,
                                     const Allocation& optimum);

// One bidder's core deviation against a profile.
struct CoreLemmaCheck {
  Rational utility;       // u_i(b'_i, b_-i; v_i)
  Rational lemma_bound;   // v_hat |S| / 4 - sum_{j in S} p_j(b) - P_i(b)
  Rational split_bound;   // s* v_hat / 2 - sum_{j in S} p_j(b) - P_i(b)
  int units = 0;          // units of S won under the deviation
  int target_units = 0;   // s*
  std::optional<Rational> threshold_price;  // s*-th lowest p_j(b) over S
  Rational payment;       // P_i(b'_i, b_-i)
  Rational payment_bound; // s* v_hat / 2 + P_i(b)

  bool lemma_holds() const { return utility >= lemma_bound; }
  bool split_holds(const Rational& v_hat) const;
};

// Items of S left unsold under b count at price 0.
CoreLemmaCheck CheckCoreDeviationLemma(const MechanismConfig& config,
                                       const Profile& profile, int bidder,
                                       const Valuation& v, ItemSet interest,
                                       const Rational& per_unit);

}  // namespace auctionlab

#endif  // AUCTIONLAB_SMOOTHNESS_H_
