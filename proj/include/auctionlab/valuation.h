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

#ifndef AUCTIONLAB_VALUATION_H_
#define AUCTIONLAB_VALUATION_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "auctionlab/item_set.h"
#include "auctionlab/rational.h"

namespace auctionlab {

enum class ValuationKind {
  kUnitDemand,
  kAdditive,
  kXos,
  kExplicitTable,
  kConstraintHomogeneous,
  kConcaveSymmetric,
};

std::string KindName(ValuationKind kind);

// Representations. Construct through the Valuation factories, which
// validate; the structs themselves carry no invariants.
struct UnitDemandRep {
  std::vector<Rational> values;
};
struct AdditiveRep {
  std::vector<Rational> values;
};
struct XosRep {
  int m = 0;
  std::vector<std::vector<Rational>> clauses;
};
struct ExplicitTableRep {
  int m = 0;
  std::vector<Rational> table;  // indexed by subset bitmask
  bool subadditive = false;
};
struct ConstraintHomogeneousRep {
  int m = 0;
  ItemSet interest;
  Rational per_unit;
};
struct ConcaveSymmetricRep {
  std::vector<Rational> f;  // f[0..m]
};

// A monotone set function over the items {0, ..., m-1} with v(empty) = 0.
class Valuation {
 public:
  using Rep = std::variant<UnitDemandRep, AdditiveRep, XosRep,
                           ExplicitTableRep, ConstraintHomogeneousRep,
                           ConcaveSymmetricRep>;

  static Valuation UnitDemand(std::vector<Rational> values);
  static Valuation Additive(std::vector<Rational> values);
  static Valuation Xos(int m, std::vector<std::vector<Rational>> clauses);
  // Checks v(empty) = 0 and monotonicity exhaustively; with `subadditive`
  // also checks v(S u T) <= v(S) + v(T) for every pair. m <= 16.
  static Valuation ExplicitTable(int m, std::vector<Rational> table,
                                 bool subadditive);
  static Valuation ConstraintHomogeneous(int m, ItemSet interest,
                                         Rational per_unit);
  // f(0) = 0, nondecreasing, concave increments.
  static Valuation ConcaveSymmetric(std::vector<Rational> f);

  ValuationKind kind() const;
  int num_items() const { return m_; }
  const Rep& rep() const { return rep_; }

  // v(T). Throws std::out_of_range if T has an item outside [m].
  Rational Value(ItemSet items) const;
  // v(held u extra) - v(held).
  Rational Marginal(ItemSet held, ItemSet extra) const;

  // Materializes v on every subset (m <= 20).
  std::vector<Rational> Tabulate() const;

  std::string ToString() const;

 private:
  Valuation(int m, Rep rep) : m_(m), rep_(std::move(rep)) {}

  int m_ = 0;
  Rep rep_;
};

// One bundle per bidder; bundles pairwise disjoint, all inside [m].
struct Allocation {
  std::vector<ItemSet> bundles;

  bool IsValid(int m) const;
  std::string ToString() const;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

Rational Welfare(const std::vector<Valuation>& profile,
                 const Allocation& allocation);

struct WelfareOptimum {
  Allocation allocation;
  Rational welfare;
};

inline constexpr uint64_t kDefaultWelfareCap = 10'000'000;

// Exhaustive maximization of sum_i v_i(S_i) over every assignment of each
// item to a bidder or to nobody. Throws CapExceeded when n^m > cap. Among
// maximizers the first in enumeration order is returned (item 0 varies
// slowest; "unsold" is tried last for each item).
WelfareOptimum OptimalWelfare(const std::vector<Valuation>& profile,
                              uint64_t cap = kDefaultWelfareCap);

// True iff beta * approx(S) >= v(S) and approx(T) <= v(T) for every T.
// Throws CapExceeded for m > 20, std::invalid_argument on mismatched m.
bool CheckPointwiseApprox(const Valuation& v, const Valuation& approx,
                          ItemSet target, const Rational& beta);

// Returns the first violated property, or an empty string.
std::string FindMonotonicityViolation(const Valuation& v);

}  // namespace auctionlab

#endif  // AUCTIONLAB_VALUATION_H_
