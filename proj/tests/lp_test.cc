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

#include "auctionlab/lp.h"
#include "doctest.h"
#include "lp_oracle.h"

namespace al = auctionlab;
using al::Rational;
using al::testing::Matrix;
using al::testing::VertexOracle;

TEST_CASE("two-variable textbook LP") {
  // max 3x + 2y  s.t.  x + y <= 4, x + 3y <= 6, x <= 3
  auto sol = al::MaximizeWithOriginFeasible({3, 2}, {{1, 1}, {1, 3}, {1, 0}}, {4, 6, 3});
  CHECK(sol.objective == 11);
  CHECK(sol.x[0] == 3);
  CHECK(sol.x[1] == 1);
}

TEST_CASE("fractional optimum is exact") {
  auto sol = al::MaximizeWithOriginFeasible({1, 1}, {{2, 1}, {1, 2}}, {1, 1});
  CHECK(sol.objective == Rational(2, 3));
}

TEST_CASE("negative right-hand side and unbounded problems are reported") {
  CHECK_THROWS_AS(al::MaximizeWithOriginFeasible({1}, {{1}}, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(al::MaximizeWithOriginFeasible({1, 1}, {{1, -1}}, {1}), std::domain_error);
}

TEST_CASE("simplex agrees with vertex enumeration on random LPs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(0, 6), rhs(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t n = 2 + trial % 3, rows = 2 + trial % 4;
    std::vector<Rational> c(n), b(rows);
    Matrix a(rows, std::vector<Rational>(n));
    for (auto& x : c) x = coef(rng);
    for (auto& row : a) {
      for (auto& x : row) x = coef(rng);
    }
    for (auto& x : b) x = rhs(rng);
    // Bound every variable so the LP is never unbounded.
    for (size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n, 0);
      e[j] = 1;
      a.push_back(e);
      b.push_back(rhs(rng));
    }
    auto sol = al::MaximizeWithOriginFeasible(c, a, b);
    CHECK(sol.objective == VertexOracle(c, a, b));
    for (size_t k = 0; k < a.size(); ++k) {
      Rational lhs = 0;
      for (size_t j = 0; j < n; ++j) lhs += a[k][j] * sol.x[j];
      CHECK(lhs <= b[k]);
    }
  }
}
