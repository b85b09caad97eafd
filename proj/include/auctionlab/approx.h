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

#ifndef AUCTIONLAB_APPROX_H_
#define AUCTIONLAB_APPROX_H_

#include <vector>

#include "auctionlab/item_set.h"
#include "auctionlab/rational.h"
#include "auctionlab/valuation.h"

namespace auctionlab {

// A surrogate valuation that never exceeds the original anywhere and, scaled
// by beta, reaches the original's value on target_set.
struct ApproxResult {
  Valuation approx;
  Rational beta;
  ItemSet target_set;
};

// Constraint-homogeneous surrogate with interest set S and per-unit value
// f(|S|)/|S|. Exact on S by concavity, so beta = 1.
ApproxResult ApproxConcaveSymmetric(const Valuation& v, ItemSet target);

// The buckets an additive valuation's positive items in S fall into.
// buckets[0] holds the items worth at least half the top value; the cutoff
// for the tail is top/(k-1), where k counts the positive items.
struct AdditiveBuckets {
  std::vector<ItemSet> buckets;
  ItemSet tail;
  int chosen = -1;  // index into buckets of the most valuable bucket
  int positive_items = 0;
};
AdditiveBuckets BucketAdditive(const Valuation& v, ItemSet target);

// Constraint-homogeneous surrogate from the most valuable bucket, per-unit
// value = cheapest item in that bucket. beta is BucketingBeta(k) for k
// positive items in S (1 when k <= 1). Throws GuaranteeViolated if the
// target-side inequality fails.
ApproxResult ApproxAdditive(const Valuation& v, ItemSet target);

// The additive clause attaining v(S), zeroed outside S. beta = 1.
ApproxResult ApproxXos(const Valuation& v, ItemSet target);

// Additive surrogate x maximizing sum_{j in S} x_j subject to
// x(T) <= v(T) for all T subset of S, x >= 0, solved exactly by constraint
// generation over a rational simplex. beta = H_{|S|}. Requires a table
// valuation tagged subadditive and |S| <= 16. Throws GuaranteeViolated if
// H_{|S|} * x(S) < v(S).
ApproxResult ApproxSubadditive(const Valuation& v, ItemSet target);

}  // namespace auctionlab

#endif  // AUCTIONLAB_APPROX_H_
