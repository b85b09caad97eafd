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

#include "auctionlab/smoothness.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "auctionlab/errors.h"

namespace auctionlab {

namespace {

using DeviationHook = std::function<void(int bidder, const Outcome& deviated)>;

Rational Margin(const MechanismConfig& config,
                const std::vector<Valuation>& valuations, const Rational& opt,
                const Profile& profile, const std::vector<PlanPtr>& deviations,
                const Rational& lambda, const Rational& mu,
                const DeviationHook& hook) {
  const int n = config.num_bidders;
  Outcome base = RunAuction(config, profile);
  Rational total = 0;
  for (int i = 0; i < n; ++i) {
    Profile deviated = profile;
    deviated[i] = deviations[i];
    Outcome out = RunAuction(config, deviated);
    total += Utility(out, i, valuations[i]);
    if (hook) hook(i, out);
  }
  return total - lambda * opt + mu * Revenue(base);
}

SmoothnessCertificate Certify(
    const GameInstance& g, const std::string& family, const Rational& lambda,
    const Rational& mu, const ProfileDomain& domain,
    const std::function<std::vector<PlanPtr>(const Profile&)>& deviations_for,
    const DeviationHook& hook) {
  g.Validate();
  SmoothnessCertificate cert;
  cert.lambda = lambda;
  cert.mu = mu;
  cert.family = family;
  const Rational opt = OptimalWelfare(g.valuations).welfare;
  bool first = true;

  auto visit = [&](const Profile& profile) {
    std::vector<PlanPtr> deviations = deviations_for(profile);
    Rational margin = Margin(g.config, g.valuations, opt, profile, deviations,
                             lambda, mu, hook);
    ++cert.profiles_checked;
    if (first || margin < cert.worst_margin) {
      cert.worst_margin = margin;
      first = false;
      if (margin < 0) {
        cert.counterexample = profile;
        cert.counterexample_deviations = deviations;
      }
    }
  };

  const uint64_t count = g.ProfileCount();
  if (count <= domain.exhaustive_cap) {
    cert.exhaustive = true;
    ForEachProfile(g, domain.exhaustive_cap,
                   [&](const Profile& p, const std::vector<size_t>&) { visit(p); });
  } else {
    if (domain.require_exhaustive) {
      throw CapExceeded("profile count " + std::to_string(count) +
                        " exceeds exhaustive cap " +
                        std::to_string(domain.exhaustive_cap));
    }
    cert.exhaustive = false;
    std::mt19937_64 rng(domain.seed);
    Profile profile(g.num_bidders());
    for (uint64_t s = 0; s < domain.samples; ++s) {
      for (int i = 0; i < g.num_bidders(); ++i) {
        const auto& space = g.plan_spaces[i];
        profile[i] = space[rng() % space.size()];
      }
      visit(profile);
    }
  }
  cert.holds = cert.worst_margin >= 0;
  std::ostringstream d;
  d << MechanismName(g.config.kind) << " n=" << g.config.num_bidders
    << " m=" << g.config.num_items << ", "
    << (cert.exhaustive ? "exhaustive " : "sampled ") << cert.profiles_checked
    << " of " << count << " profiles";
  if (!cert.exhaustive) d << " (seed " << domain.seed << ")";
  cert.domain = d.str();
  return cert;
}

const ConstraintHomogeneousRep& HomogeneousRep(const Valuation& v) {
  const auto* rep = std::get_if<ConstraintHomogeneousRep>(&v.rep());
  if (!rep) {
    throw std::invalid_argument("expected a constraint-homogeneous valuation, got " +
                                KindName(v.kind()));
  }
  return *rep;
}

}  // namespace

std::string SmoothnessCertificate::ToString() const {
  std::ostringstream os;
  os << "family " << family << ", (lambda, mu) = (" << auctionlab::ToString(lambda)
     << ", " << auctionlab::ToString(mu) << "), " << domain << ": "
     << (holds ? "holds everywhere" : "COUNTEREXAMPLE") << ", worst margin "
     << auctionlab::ToString(worst_margin);
  if (counterexample) {
    os << "\n  profile:";
    for (const auto& p : *counterexample) os << " [" << p->Describe() << "]";
  }
  return os.str();
}

DeviationFamily UnitDemandFamily() {
  return {"unit_demand",
          [](int, const Valuation& v, ItemSet opt_bundle, PlanPtr original) {
            int best = -1;
            Rational best_value = 0;
            for (int j : opt_bundle.Members()) {
              Rational value = v.Value(ItemSet::Single(j));
              if (value > best_value) {
                best_value = value;
                best = j;
              }
            }
            if (best < 0) return original;
            return UnitDemandDeviation(std::move(original), best, best_value);
          }};
}

DeviationFamily CoreFamily() {
  return {"core", [](int, const Valuation& v, ItemSet opt_bundle, PlanPtr original) {
            const auto& rep = HomogeneousRep(v);
            return CoreDeviation(std::move(original), rep.interest & opt_bundle,
                                 rep.per_unit);
          }};
}

Rational SmoothnessMargin(const MechanismConfig& config,
                          const std::vector<Valuation>& valuations,
                          const Allocation& optimum, const Profile& profile,
                          const std::vector<PlanPtr>& deviations,
                          const Rational& lambda, const Rational& mu) {
  return Margin(config, valuations, Welfare(valuations, optimum), profile,
                deviations, lambda, mu, nullptr);
}

SmoothnessCertificate CheckSmoothness(const GameInstance& instance,
                                      const DeviationFamily& family,
                                      const Rational& lambda, const Rational& mu,
                                      const ProfileDomain& domain) {
  const Allocation optimum = OptimalWelfare(instance.valuations).allocation;
  return Certify(
      instance, family.id, lambda, mu, domain,
      [&](const Profile& profile) {
        std::vector<PlanPtr> deviations;
        for (int i = 0; i < instance.num_bidders(); ++i) {
          deviations.push_back(family.build(i, instance.valuations[i],
                                            optimum.bundles[i], profile[i]));
        }
        return deviations;
      },
      nullptr);
}

std::string ApproximatorName(Approximator a) {
  switch (a) {
    case Approximator::kConcaveSymmetric: return "concave_symmetric";
    case Approximator::kAdditive: return "additive";
    case Approximator::kXos: return "xos";
    case Approximator::kSubadditive: return "subadditive";
  }
  return "unknown";
}

ApproxResult ApproximateToHomogeneous(Approximator a, const Valuation& v,
                                      ItemSet target) {
  if (target.empty()) {
    return {Valuation::ConstraintHomogeneous(v.num_items(), ItemSet(), 0), 1, target};
  }
  switch (a) {
    case Approximator::kConcaveSymmetric:
      return ApproxConcaveSymmetric(v, target);
    case Approximator::kAdditive:
      return ApproxAdditive(v, target);
    case Approximator::kXos:
    case Approximator::kSubadditive: {
      ApproxResult first =
          a == Approximator::kXos ? ApproxXos(v, target) : ApproxSubadditive(v, target);
      ApproxResult second = ApproxAdditive(first.approx, target);
      second.beta *= first.beta;
      return second;
    }
  }
  throw std::invalid_argument("unknown approximator");
}

Rational ClassBeta(Approximator a, int m) {
  switch (a) {
    case Approximator::kConcaveSymmetric: return 1;
    case Approximator::kAdditive:
    case Approximator::kXos: return BucketingBeta(std::max(m, 1));
    case Approximator::kSubadditive:
      return Harmonic(std::max(m, 1)) * BucketingBeta(std::max(m, 1));
  }
  throw std::invalid_argument("unknown approximator");
}

SmoothnessCertificate CheckSmoothnessViaExtension(const GameInstance& instance,
                                                  Approximator approximator,
                                                  const Rational& base_lambda,
                                                  const Rational& mu,
                                                  const ProfileDomain& domain) {
  instance.Validate();
  const int n = instance.num_bidders();
  const Rational beta = ClassBeta(approximator, instance.config.num_items);
  const WelfareOptimum optimum = OptimalWelfare(instance.valuations);

  std::vector<Valuation> surrogate;
  std::vector<const ConstraintHomogeneousRep*> reps;
  for (int i = 0; i < n; ++i) {
    ApproxResult r = ApproximateToHomogeneous(approximator, instance.valuations[i],
                                              optimum.allocation.bundles[i]);
    if (r.beta > beta) {
      throw GuaranteeViolated("bidder " + std::to_string(i) + " needs beta " +
                              ToString(r.beta) + " above the class bound " +
                              ToString(beta));
    }
    surrogate.push_back(std::move(r.approx));
  }
  for (const auto& v : surrogate) reps.push_back(&HomogeneousRep(v));
  if (beta * OptimalWelfare(surrogate).welfare < optimum.welfare) {
    throw GuaranteeViolated("beta OPT(v') falls below OPT(v)");
  }

  SmoothnessCertificate cert = Certify(
      instance, "core_via_" + ApproximatorName(approximator), base_lambda / beta,
      mu, domain,
      [&](const Profile& profile) {
        std::vector<PlanPtr> deviations;
        for (int i = 0; i < n; ++i) {
          deviations.push_back(
              CoreDeviation(profile[i], reps[i]->interest, reps[i]->per_unit));
        }
        return deviations;
      },
      [&](int i, const Outcome& out) {
        ItemSet won = out.allocation.bundles[i];
        if (instance.valuations[i].Value(won) < surrogate[i].Value(won)) {
          throw GuaranteeViolated("surrogate exceeds the valuation on " +
                                  won.ToString());
        }
      });
  return cert;
}

Rational PoaBound(const Rational& lambda, const Rational& mu) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  return std::max<Rational>(1, mu) / lambda;
}

PaymentIdentity CheckPaymentIdentity(const Outcome& outcome,
                                     const Allocation& optimum) {
  PaymentIdentity id;
  Rational by_item = 0;
  for (const auto& p : outcome.item_prices) by_item += p;
  id.prices_match_payments = by_item == Revenue(outcome);

  const int m = static_cast<int>(outcome.item_prices.size());
  ItemSet covered;
  for (ItemSet b : optimum.bundles) covered = covered | b;
  if (covered != ItemSet::All(m)) {
    id.notice = "optimum leaves " + (ItemSet::All(m) - covered).ToString() +
                " unassigned; re-indexing check skipped";
    return id;
  }
  Rational by_bundle = 0;
  for (ItemSet b : optimum.bundles) {
    for (int j : b.Members()) by_bundle += outcome.item_prices[j];
  }
  id.optimum_reindexes = by_bundle == by_item;
  return id;
}

bool CoreLemmaCheck::split_holds(const Rational& v_hat) const {
  if (units >= target_units) return true;
  return threshold_price && *threshold_price >= v_hat / 2;
}

CoreLemmaCheck CheckCoreDeviationLemma(const MechanismConfig& config,
                                       const Profile& profile, int bidder,
                                       const Valuation& v, ItemSet interest,
                                       const Rational& per_unit) {
  CoreLemmaCheck c;
  Outcome base = RunAuction(config, profile);
  const Rational paid = base.payments.at(bidder);
  std::vector<Rational> prices;
  Rational sum = 0;
  for (int j : interest.Members()) {
    prices.push_back(base.item_prices.at(j));
    sum += base.item_prices[j];
  }
  std::sort(prices.begin(), prices.end());
  c.target_units = CoreTargetUnits(interest);
  if (c.target_units > 0) c.threshold_price = prices[c.target_units - 1];

  Profile deviated = profile;
  deviated[bidder] = CoreDeviation(profile[bidder], interest, per_unit);
  Outcome out = RunAuction(config, deviated);
  c.utility = Utility(out, bidder, v);
  c.units = (out.allocation.bundles[bidder] & interest).size();
  c.payment = out.payments[bidder];
  c.lemma_bound = per_unit * interest.size() / 4 - sum - paid;
  c.split_bound = per_unit * c.target_units / 2 - sum - paid;
  c.payment_bound = per_unit * c.target_units / 2 + paid;
  return c;
}

}  // namespace auctionlab
