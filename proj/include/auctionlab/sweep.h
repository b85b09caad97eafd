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

#ifndef AUCTIONLAB_SWEEP_H_
#define AUCTIONLAB_SWEEP_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "auctionlab/grid.h"
#include "auctionlab/nash.h"
#include "auctionlab/smoothness.h"
#include "auctionlab/valuation.h"

namespace auctionlab {

// Random valuations with values on multiples of 1/den in [0, 1] (per item
// or per unit). Deterministic for a given generator state.
Valuation RandomUnitDemand(std::mt19937_64& rng, int m, int den);
Valuation RandomAdditive(std::mt19937_64& rng, int m, int den);
Valuation RandomHomogeneous(std::mt19937_64& rng, int m, int den);
Valuation RandomConcaveSymmetric(std::mt19937_64& rng, int m, int den);
Valuation RandomXos(std::mt19937_64& rng, int m, int den, int clauses);
// max of a random XOS valuation and c * ceil(|S|/2), tabulated.
Valuation RandomSubadditiveTable(std::mt19937_64& rng, int m, int den);

// Draws from [lo, hi].
int RandomInt(std::mt19937_64& rng, int lo, int hi);

struct SweepOptions {
  std::string family = "unit_demand";  // unit_demand|additive|homogeneous|concave|xos|subadditive
  int n = 3;
  int m = 3;
  int instances = 20;
  int den = 8;              // value resolution
  Rational step{1, 8};      // grid step; grid is {0, step, ..., 1}
  bool plus_candidates = false;
  bool vary_size = false;   // draw n and m uniformly from [1, n] and [1, m]
  std::vector<SelectionRule> rules{SelectionRule::kBestItem};
  MechanismKind kind = MechanismKind::kDraft;
  uint64_t seed = 0;
  uint64_t cap = kDefaultProfileCap;
  bool nash = true;
  bool smoothness = true;
};

struct SweepRow {
  int instance = 0;
  int n = 0;
  int m = 0;
  std::string valuations;
  Rational opt;
  size_t equilibria = 0;
  std::optional<Rational> min_welfare;
  std::optional<Rational> max_welfare;
  std::optional<Rational> poa;
  Rational slack;  // 2 n step / min welfare, or 0
  std::optional<SmoothnessCertificate> certificate;
};

std::vector<SweepRow> RunSweep(const SweepOptions& options);

// Schema v1: instance,n,m,opt,equilibria,min_welfare,max_welfare,poa,
// poa_decimal,slack,lambda,mu,margin,margin_decimal,holds,valuations
std::string SweepCsv(const std::vector<SweepRow>& rows);

}  // namespace auctionlab

#endif  // AUCTIONLAB_SWEEP_H_
