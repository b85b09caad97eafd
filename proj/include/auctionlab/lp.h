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

#ifndef AUCTIONLAB_LP_H_
#define AUCTIONLAB_LP_H_

#include <vector>

#include "auctionlab/rational.h"

namespace auctionlab {

struct LpSolution {
  std::vector<Rational> x;
  Rational objective;
};

// Solves  max c.x  s.t.  A x <= b, x >= 0  exactly, for b >= 0 (so the
// origin is feasible). Dense tableau simplex with Bland's rule. Throws
// std::invalid_argument on a negative right-hand side and std::domain_error
// when the objective is unbounded.
LpSolution MaximizeWithOriginFeasible(
    const std::vector<Rational>& c,
    const std::vector<std::vector<Rational>>& a,
    const std::vector<Rational>& b);

}  // namespace auctionlab

#endif  // AUCTIONLAB_LP_H_
