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

#include "auctionlab/approx.h"
#include "auctionlab/errors.h"
#include "auctionlab/sweep.h"
#include "doctest.h"
#include "lp_oracle.h"

namespace al = auctionlab;
using al::ItemSet;
using al::Rational;
using al::Valuation;

namespace {

const al::ConstraintHomogeneousRep& Hom(const Valuation& v) {
  return std::get<al::ConstraintHomogeneousRep>(v.rep());
}

const std::vector<Rational>& Weights(const Valuation& v) {
  return std::get<al::AdditiveRep>(v.rep()).values;
}

ItemSet RandomNonempty(std::mt19937_64& rng, int m) {
  uint32_t bits = 0;
  while (!bits) bits = static_cast<uint32_t>(al::RandomInt(rng, 0, (1 << m) - 1));
  return ItemSet(bits);
}

}  // namespace

TEST_CASE("concave symmetric: average value per unit of S") {
  auto r = al::ApproxConcaveSymmetric(Valuation::ConcaveSymmetric({0, 4, 6, 7}), {0, 1, 2});
  CHECK(Hom(r.approx).per_unit == Rational(7, 3));
  CHECK(r.beta == 1);
}

TEST_CASE("concave symmetric: linear f is reproduced on subsets of S") {
  Valuation v = Valuation::ConcaveSymmetric({0, 2, 4});
  auto r = al::ApproxConcaveSymmetric(v, {0, 1});
  CHECK(Hom(r.approx).per_unit == 2);
  for (uint32_t t = 0; t < 4; ++t) CHECK(r.approx.Value(ItemSet(t)) == v.Value(ItemSet(t)));
}

TEST_CASE("bucketing the additive vector 8, 5, 3, 1") {
  Valuation v = Valuation::Additive({8, 5, 3, 1});
  al::AdditiveBuckets b = al::BucketAdditive(v, ItemSet::All(4));
  REQUIRE(b.buckets.size() == 2);
  CHECK(b.buckets[0] == ItemSet{0, 1});
  CHECK(b.buckets[1] == ItemSet{2});
  CHECK(b.tail == ItemSet{3});
  CHECK(b.chosen == 0);
  auto r = al::ApproxAdditive(v, ItemSet::All(4));
  CHECK(Hom(r.approx).interest == ItemSet{0, 1});
  CHECK(Hom(r.approx).per_unit == 5);
  CHECK(r.approx.Value(ItemSet::All(4)) == 10);
  CHECK(r.beta * 10 >= 17);
  CHECK(al::CheckPointwiseApprox(v, r.approx, ItemSet::All(4), r.beta));
}

TEST_CASE("bucketing equal items is exact") {
  Valuation v = Valuation::Additive({3, 3, 3, 3});
  auto r = al::ApproxAdditive(v, ItemSet::All(4));
  CHECK(Hom(r.approx).interest == ItemSet::All(4));
  CHECK(r.approx.Value(ItemSet::All(4)) == v.Value(ItemSet::All(4)));
}

TEST_CASE("bucketing a singleton") {
  auto r = al::ApproxAdditive(Valuation::Additive({0, 7}), {1});
  CHECK(Hom(r.approx).interest == ItemSet{1});
  CHECK(Hom(r.approx).per_unit == 7);
  CHECK(r.beta == 1);
}

TEST_CASE("xos picks the clause attaining v(S)") {
  auto one = al::ApproxXos(Valuation::Xos(3, {{1, 2, 3}}), {0, 2});
  CHECK(Weights(one.approx) == std::vector<Rational>{1, 0, 3});
  auto two = al::ApproxXos(Valuation::Xos(2, {{3, 0}, {0, 3}}), {0});
  CHECK(Weights(two.approx) == std::vector<Rational>{3, 0});
  CHECK(two.beta == 1);
}

TEST_CASE("subadditive LP on an additive table recovers the weights") {
  Valuation add = Valuation::Additive({2, 5, 1});
  Valuation table = Valuation::ExplicitTable(3, add.Tabulate(), true);
  auto r = al::ApproxSubadditive(table, ItemSet::All(3));
  CHECK(Weights(r.approx) == std::vector<Rational>{2, 5, 1});
  CHECK(r.approx.Value(ItemSet::All(3)) == 8);
}

TEST_CASE("subadditive LP where every nonempty set is worth 1") {
  Valuation v = Valuation::ExplicitTable(2, {0, 1, 1, 1}, true);
  auto r = al::ApproxSubadditive(v, ItemSet::All(2));
  CHECK(r.approx.Value(ItemSet::All(2)) == 1);
  CHECK(r.beta == Rational(3, 2));
}

TEST_CASE("subadditive LP optimum matches vertex enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + trial % 3;
    Valuation v = al::RandomSubadditiveTable(rng, m, 6);
    ItemSet s = RandomNonempty(rng, m);
    auto r = al::ApproxSubadditive(v, s);
    const auto items = s.Members();
    const size_t k = items.size();
    al::testing::Matrix a;
    std::vector<Rational> b;
    al::ForEachSubset(s, [&](ItemSet t) {
      if (t.empty()) return;
      std::vector<Rational> row(k, 0);
      for (size_t i = 0; i < k; ++i) row[i] = t.contains(items[i]) ? 1 : 0;
      a.push_back(row);
      b.push_back(v.Value(t));
    });
    CHECK(r.approx.Value(s) ==
          al::testing::VertexOracle(std::vector<Rational>(k, 1), a, b));
  }
}

TEST_CASE("approximations on random inputs pass the pointwise check") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 6;
    ItemSet s = RandomNonempty(rng, m);
    Valuation c = al::RandomConcaveSymmetric(rng, m, 8);
    auto rc = al::ApproxConcaveSymmetric(c, s);
    CHECK(al::CheckPointwiseApprox(c, rc.approx, s, rc.beta));
    Valuation a = al::RandomAdditive(rng, m, 8);
    auto ra = al::ApproxAdditive(a, s);
    CHECK(al::CheckPointwiseApprox(a, ra.approx, s, ra.beta));
    Valuation x = al::RandomXos(rng, m, 8, 3);
    auto rx = al::ApproxXos(x, s);
    CHECK(al::CheckPointwiseApprox(x, rx.approx, s, rx.beta));
    if (m <= 4) {
      Valuation t = al::RandomSubadditiveTable(rng, m, 8);
      auto rt = al::ApproxSubadditive(t, s);
      CHECK(rt.beta == al::Harmonic(s.size()));
      CHECK(al::CheckPointwiseApprox(t, rt.approx, s, rt.beta));
    }
  }
}

TEST_CASE("approximators reject the wrong representation") {
  CHECK_THROWS_AS(al::ApproxAdditive(Valuation::UnitDemand({1, 2}), {0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(al::ApproxXos(Valuation::Additive({1}), {0}), std::invalid_argument);
  CHECK_THROWS_AS(al::ApproxSubadditive(Valuation::ExplicitTable(1, {0, 1}, false), {0}),
                  std::invalid_argument);
}
