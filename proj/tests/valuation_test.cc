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

#include <random>

#include "auctionlab/valuation.h"
#include "doctest.h"

namespace al = auctionlab;
using al::ItemSet;
using al::Rational;
using al::Valuation;

namespace {

Valuation UD(std::vector<int> v) {
  std::vector<Rational> r(v.begin(), v.end());
  return Valuation::UnitDemand(r);
}

// Every map from items to {bidder, unassigned}.
Rational BruteForceOpt(const std::vector<Valuation>& vals, int m) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> owner(m, 0);
  Rational best = 0;
  while (true) {
    std::vector<ItemSet> bundles(n);
    for (int j = 0; j < m; ++j) {
      if (owner[j] < n) bundles[owner[j]].insert(j);
    }
    Rational w = 0;
    for (int i = 0; i < n; ++i) w += vals[i].Value(bundles[i]);
    best = std::max(best, w);
    int k = 0;
    while (k < m && ++owner[k] == n + 1) owner[k++] = 0;
    if (k == m) break;
  }
  return best;
}

}  // namespace

TEST_CASE("unit demand takes the best item of the bundle") {
  CHECK(UD({32, 31, 83}).Value({0, 2}) == 83);
  CHECK(UD({32, 31, 83}).Value({0, 1}) == 32);
}

TEST_CASE("every representation is zero on the empty set") {
  std::vector<Valuation> vs{
      UD({1, 2}),
      Valuation::Additive({1, 2}),
      Valuation::Xos(2, {{1, 0}, {0, 2}}),
      Valuation::ExplicitTable(2, {0, 1, 1, 1}, true),
      Valuation::ConstraintHomogeneous(2, {0, 1}, 3),
      Valuation::ConcaveSymmetric({0, 2, 3}),
  };
  for (const auto& v : vs) CHECK(v.Value(ItemSet()) == 0);
}

TEST_CASE("constraint-homogeneous counts units inside the interest set") {
  Valuation v = Valuation::ConstraintHomogeneous(4, {1, 2, 3}, 5);
  CHECK(v.Value({0, 1, 2}) == 10);
  CHECK(v.Value({0}) == 0);
  CHECK(v.Marginal({1}, {0, 3}) == 5);
}

TEST_CASE("additive, XOS and concave symmetric values") {
  CHECK(Valuation::Additive({2, 3}).Value({0, 1}) == 5);
  Valuation x = Valuation::Xos(2, {{3, 0}, {0, 3}, {1, 1}});
  CHECK(x.Value({0, 1}) == 3);
  CHECK(x.Value({1}) == 3);
  Valuation c = Valuation::ConcaveSymmetric({0, 4, 6, 7});
  CHECK(c.Value({0, 2}) == 6);
  CHECK(c.Value({0, 1, 2}) == 7);
}

TEST_CASE("invalid valuations are rejected") {
  CHECK_THROWS(Valuation::UnitDemand({Rational(-1)}));
  CHECK_THROWS(Valuation::ConcaveSymmetric({0, 1, 3}));   // not concave
  CHECK_THROWS(Valuation::ConcaveSymmetric({1, 2}));      // f(0) != 0
  CHECK_THROWS(Valuation::ExplicitTable(2, {0, 1, 1}, false));
  CHECK_THROWS(Valuation::ExplicitTable(2, {0, 1, 1, 3}, true));  // not subadditive
  CHECK_THROWS(Valuation::ExplicitTable(2, {0, 2, 1, 1}, false));  // not monotone
}

TEST_CASE("tabulation agrees with Value") {
  Valuation v = Valuation::Xos(3, {{1, 2, 0}, {0, 1, 3}});
  auto t = v.Tabulate();
  REQUIRE(t.size() == 8);
  for (uint32_t s = 0; s < 8; ++s) CHECK(t[s] == v.Value(ItemSet(s)));
  CHECK(al::FindMonotonicityViolation(v).empty());
}

TEST_CASE("optimal welfare on the three-by-three matrix") {
  std::vector<Valuation> vals{UD({32, 31, 83}), UD({9, 84, 97}), UD({2, 42, 93})};
  al::WelfareOptimum opt = al::OptimalWelfare(vals);
  CHECK(opt.welfare == 209);
  CHECK(opt.allocation.bundles[0] == ItemSet{0});
  CHECK(opt.allocation.bundles[1] == ItemSet{1});
  CHECK(opt.allocation.bundles[2] == ItemSet{2});
  CHECK(al::Welfare(vals, opt.allocation) == 209);
}

TEST_CASE("a single additive bidder takes everything") {
  al::WelfareOptimum opt = al::OptimalWelfare({Valuation::Additive({2, 3})});
  CHECK(opt.welfare == 5);
  CHECK(opt.allocation.bundles[0] == ItemSet{0, 1});
}

TEST_CASE("optimal welfare matches brute force on random instances") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3, m = 1 + (trial / 3) % 4;
    std::vector<Valuation> vals;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> a, b;
      for (int j = 0; j < m; ++j) {
        a.push_back(val(rng));
        b.push_back(val(rng));
      }
      if (trial % 2) vals.push_back(Valuation::UnitDemand(a));
      else vals.push_back(Valuation::Xos(m, {a, b}));
    }
    al::WelfareOptimum opt = al::OptimalWelfare(vals);
    CHECK(opt.welfare == BruteForceOpt(vals, m));
    CHECK(opt.allocation.IsValid(m));
    CHECK(al::Welfare(vals, opt.allocation) == opt.welfare);
  }
}

TEST_CASE("pointwise approximation check") {
  Valuation add = Valuation::Additive({8, 5, 3, 1});
  ItemSet all = ItemSet::All(4);
  CHECK(al::CheckPointwiseApprox(add, add, all, 1));
  Valuation hom = Valuation::ConstraintHomogeneous(4, {0, 1}, 5);
  CHECK(al::CheckPointwiseApprox(add, hom, all, al::BucketingBeta(4)));
  Valuation over = Valuation::Additive({9, 5, 3, 1});
  CHECK_FALSE(al::CheckPointwiseApprox(add, over, all, 2));
}
