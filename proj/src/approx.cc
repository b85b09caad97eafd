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

#include "auctionlab/approx.h"

#include <stdexcept>
#include <variant>

#include "auctionlab/errors.h"
#include "auctionlab/lp.h"

namespace auctionlab {

ApproxResult ApproxConcaveSymmetric(const Valuation& v, ItemSet target) {
  if (v.kind() != ValuationKind::kConcaveSymmetric) {
    throw std::invalid_argument("concave approximation needs a concave valuation");
  }
  if (target.empty()) throw std::invalid_argument("concave approximation: empty S");
  if (!target.FitsIn(v.num_items())) throw std::out_of_range("target set");
  Rational per_unit = v.Value(target) / target.size();
  return {Valuation::ConstraintHomogeneous(v.num_items(), target, per_unit),
          Rational(1), target};
}

AdditiveBuckets BucketAdditive(const Valuation& v, ItemSet target) {
  if (v.kind() != ValuationKind::kAdditive) {
    throw std::invalid_argument("bucketing needs an additive valuation");
  }
  if (!target.FitsIn(v.num_items())) throw std::out_of_range("target set");
  const auto& values = std::get<AdditiveRep>(v.rep()).values;

  ItemSet positive;
  Rational top = 0;
  for (int j : target.Members()) {
    if (values[j] > 0) {
      positive.insert(j);
      if (values[j] > top) top = values[j];
    }
  }
  AdditiveBuckets out;
  out.positive_items = positive.size();
  if (positive.empty()) return out;
  if (positive.size() == 1) {
    out.buckets.push_back(positive);
    out.chosen = 0;
    return out;
  }

  const Rational cutoff = top / (positive.size() - 1);
  Rational upper = top;  // exclusive bound for buckets after the first
  bool first = true;
  while (true) {
    Rational half = upper / 2;
    Rational lower = half > cutoff ? half : cutoff;
    ItemSet bucket;
    for (int j : positive.Members()) {
      if (values[j] >= lower && (first || values[j] < upper)) bucket.insert(j);
    }
    out.buckets.push_back(bucket);
    first = false;
    if (lower == cutoff) break;
    upper = lower;
  }
  for (int j : positive.Members()) {
    if (values[j] < cutoff) out.tail.insert(j);
  }

  Rational best = -1;
  for (size_t t = 0; t < out.buckets.size(); ++t) {
    Rational worth = v.Value(out.buckets[t]);
    if (worth > best) {
      best = worth;
      out.chosen = static_cast<int>(t);
    }
  }
  // The tail holds at most k-1 items each worth less than top/(k-1).
  if (!out.tail.empty() && !(v.Value(out.tail) < top)) {
    throw GuaranteeViolated("bucketing: tail not below the top item");
  }
  if (v.Value(out.buckets[0]) < top) {
    throw GuaranteeViolated("bucketing: first bucket misses the top item");
  }
  return out;
}

ApproxResult ApproxAdditive(const Valuation& v, ItemSet target) {
  if (target.empty()) throw std::invalid_argument("additive approximation: empty S");
  AdditiveBuckets b = BucketAdditive(v, target);
  const int m = v.num_items();
  if (b.positive_items == 0) {
    return {Valuation::ConstraintHomogeneous(m, ItemSet(), Rational(0)),
            Rational(1), target};
  }
  const auto& values = std::get<AdditiveRep>(v.rep()).values;
  ItemSet chosen = b.buckets[b.chosen];
  Rational per_unit = -1;
  for (int j : chosen.Members()) {
    if (per_unit < 0 || values[j] < per_unit) per_unit = values[j];
  }
  Valuation approx = Valuation::ConstraintHomogeneous(m, chosen, per_unit);
  Rational beta = BucketingBeta(b.positive_items);
  if (beta * approx.Value(target) < v.Value(target)) {
    throw GuaranteeViolated("additive approximation: beta * v'(S) < v(S) on " +
                            target.ToString());
  }
  return {approx, beta, target};
}

ApproxResult ApproxXos(const Valuation& v, ItemSet target) {
  if (v.kind() != ValuationKind::kXos) {
    throw std::invalid_argument("xos approximation needs an xos valuation");
  }
  if (!target.FitsIn(v.num_items())) throw std::out_of_range("target set");
  const auto& clauses = std::get<XosRep>(v.rep()).clauses;
  size_t best = 0;
  Rational best_sum = -1;
  for (size_t c = 0; c < clauses.size(); ++c) {
    Rational sum = 0;
    for (int j : target.Members()) sum += clauses[c][j];
    if (sum > best_sum) {
      best_sum = sum;
      best = c;
    }
  }
  std::vector<Rational> values(v.num_items(), Rational(0));
  for (int j : target.Members()) values[j] = clauses[best][j];
  return {Valuation::Additive(std::move(values)), Rational(1), target};
}

ApproxResult ApproxSubadditive(const Valuation& v, ItemSet target) {
  if (v.kind() != ValuationKind::kExplicitTable ||
      !std::get<ExplicitTableRep>(v.rep()).subadditive) {
    throw std::invalid_argument(
        "subadditive approximation needs a table tagged subadditive");
  }
  if (!target.FitsIn(v.num_items())) throw std::out_of_range("target set");
  if (target.size() > 16) throw CapExceeded("subadditive approximation: |S| > 16");
  const int m = v.num_items();
  if (target.empty()) {
    return {Valuation::Additive(std::vector<Rational>(m, Rational(0))),
            Rational(1), target};
  }

  const std::vector<int> items = target.Members();
  const size_t k = items.size();
  std::vector<Rational> objective(k, Rational(1));
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto add_row = [&](ItemSet t) {
    std::vector<Rational> row(k, Rational(0));
    for (size_t idx = 0; idx < k; ++idx) {
      if (t.contains(items[idx])) row[idx] = 1;
    }
    rows.push_back(std::move(row));
    rhs.push_back(v.Value(t));
  };
  for (int j : items) add_row(ItemSet::Single(j));
  if (k > 1) add_row(target);

  LpSolution sol;
  while (true) {
    sol = MaximizeWithOriginFeasible(objective, rows, rhs);
    ItemSet worst;
    Rational worst_excess = 0;
    ForEachSubset(target, [&](ItemSet t) {
      Rational load = 0;
      for (size_t idx = 0; idx < k; ++idx) {
        if (t.contains(items[idx])) load += sol.x[idx];
      }
      Rational excess = load - v.Value(t);
      if (excess > worst_excess) {
        worst_excess = excess;
        worst = t;
      }
    });
    if (worst_excess == 0) break;
    add_row(worst);
  }

  std::vector<Rational> values(m, Rational(0));
  for (size_t idx = 0; idx < k; ++idx) values[items[idx]] = sol.x[idx];
  Valuation approx = Valuation::Additive(std::move(values));
  Rational beta = Harmonic(static_cast<int>(k));
  if (beta * approx.Value(target) < v.Value(target)) {
    throw GuaranteeViolated("subadditive approximation: H_k * x(S) < v(S) on " +
                            target.ToString());
  }
  return {approx, beta, target};
}

}  // namespace auctionlab
