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

#include "auctionlab/valuation.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "auctionlab/errors.h"

namespace auctionlab {

namespace {

void RequireNonnegative(const std::vector<Rational>& values, const char* what) {
  for (const Rational& x : values) {
    if (x < 0) throw std::invalid_argument(std::string(what) + ": negative value");
  }
}

void RequireItemCount(int m) {
  if (m < 0 || m > kMaxItems) throw std::invalid_argument("item count out of range");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string JoinValues(const std::vector<Rational>& values) {
  std::ostringstream os;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ' ';
    os << ToString(values[i]);
  }
  return os.str();
}

}  // namespace

std::string KindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kUnitDemand: return "unit_demand";
    case ValuationKind::kAdditive: return "additive";
    case ValuationKind::kXos: return "xos";
    case ValuationKind::kExplicitTable: return "table";
    case ValuationKind::kConstraintHomogeneous: return "homogeneous";
    case ValuationKind::kConcaveSymmetric: return "concave";
  }
  return "unknown";
}

Valuation Valuation::UnitDemand(std::vector<Rational> values) {
  RequireItemCount(static_cast<int>(values.size()));
  RequireNonnegative(values, "unit-demand");
  int m = static_cast<int>(values.size());
  return Valuation(m, UnitDemandRep{std::move(values)});
}

Valuation Valuation::Additive(std::vector<Rational> values) {
  RequireItemCount(static_cast<int>(values.size()));
  RequireNonnegative(values, "additive");
  int m = static_cast<int>(values.size());
  return Valuation(m, AdditiveRep{std::move(values)});
}

Valuation Valuation::Xos(int m, std::vector<std::vector<Rational>> clauses) {
  RequireItemCount(m);
  if (clauses.empty()) throw std::invalid_argument("xos: no clauses");
  for (const auto& c : clauses) {
    if (static_cast<int>(c.size()) != m) {
      throw std::invalid_argument("xos: clause length differs from m");
    }
    RequireNonnegative(c, "xos");
  }
  return Valuation(m, XosRep{m, std::move(clauses)});
}

Valuation Valuation::ExplicitTable(int m, std::vector<Rational> table,
                                   bool subadditive) {
  if (m < 0 || m > 16) throw std::invalid_argument("table: m must be in [0,16]");
  if (table.size() != (size_t{1} << m)) {
    throw std::invalid_argument("table: expected 2^m entries");
  }
  Valuation v(m, ExplicitTableRep{m, std::move(table), subadditive});
  std::string problem = FindMonotonicityViolation(v);
  if (!problem.empty()) throw std::invalid_argument("table: " + problem);
  if (subadditive) {
    const auto& t = std::get<ExplicitTableRep>(v.rep_).table;
    uint32_t full = ItemSet::All(m).bits();
    for (uint32_t s = 0; s <= full; ++s) {
      for (uint32_t u = s; u <= full; ++u) {
        if (t[s | u] > t[s] + t[u]) {
          throw std::invalid_argument("table: not subadditive at " +
                                      ItemSet(s).ToString() + " and " +
                                      ItemSet(u).ToString());
        }
      }
    }
  }
  return v;
}

Valuation Valuation::ConstraintHomogeneous(int m, ItemSet interest,
                                           Rational per_unit) {
  RequireItemCount(m);
  if (!interest.FitsIn(m)) throw std::out_of_range("homogeneous: interest set");
  if (per_unit < 0) throw std::invalid_argument("homogeneous: negative value");
  return Valuation(m, ConstraintHomogeneousRep{m, interest, std::move(per_unit)});
}

Valuation Valuation::ConcaveSymmetric(std::vector<Rational> f) {
  if (f.empty()) throw std::invalid_argument("concave: need f(0)");
  int m = static_cast<int>(f.size()) - 1;
  RequireItemCount(m);
  if (f[0] != 0) throw std::invalid_argument("concave: f(0) must be 0");
  for (int k = 1; k <= m; ++k) {
    if (f[k] < f[k - 1]) throw std::invalid_argument("concave: f decreasing");
    if (k >= 2 && f[k] - f[k - 1] > f[k - 1] - f[k - 2]) {
      throw std::invalid_argument("concave: increments increase");
    }
  }
  return Valuation(m, ConcaveSymmetricRep{std::move(f)});
}

ValuationKind Valuation::kind() const {
  return static_cast<ValuationKind>(rep_.index());
}

Rational Valuation::Value(ItemSet items) const {
  if (!items.FitsIn(m_)) throw std::out_of_range("item index out of range");
  return std::visit(
      Overloaded{
          [&](const UnitDemandRep& r) {
            Rational best = 0;
            for (int j : items.Members()) best = std::max(best, r.values[j]);
            return best;
          },
          [&](const AdditiveRep& r) {
            Rational sum = 0;
            for (int j : items.Members()) sum += r.values[j];
            return sum;
          },
          [&](const XosRep& r) {
            Rational best = 0;
            for (const auto& clause : r.clauses) {
              Rational sum = 0;
              for (int j : items.Members()) sum += clause[j];
              best = std::max(best, sum);
            }
            return best;
          },
          [&](const ExplicitTableRep& r) { return r.table[items.bits()]; },
          [&](const ConstraintHomogeneousRep& r) {
            return Rational(r.per_unit * (items & r.interest).size());
          },
          [&](const ConcaveSymmetricRep& r) { return r.f[items.size()]; },
      },
      rep_);
}

Rational Valuation::Marginal(ItemSet held, ItemSet extra) const {
  return Value(held | extra) - Value(held);
}

std::vector<Rational> Valuation::Tabulate() const {
  if (m_ > 20) throw CapExceeded("tabulate: m > 20");
  std::vector<Rational> out(size_t{1} << m_);
  for (uint32_t s = 0; s < out.size(); ++s) out[s] = Value(ItemSet(s));
  return out;
}

std::string Valuation::ToString() const {
  return std::visit(
      Overloaded{
          [](const UnitDemandRep& r) { return "unit_demand " + JoinValues(r.values); },
          [](const AdditiveRep& r) { return "additive " + JoinValues(r.values); },
          [](const XosRep& r) {
            std::string s = "xos " + std::to_string(r.m);
            for (const auto& c : r.clauses) s += " | " + JoinValues(c);
            return s;
          },
          [](const ExplicitTableRep& r) {
            return std::string(r.subadditive ? "subadditive_table " : "table ") +
                   std::to_string(r.m) + " " + JoinValues(r.table);
          },
          [](const ConstraintHomogeneousRep& r) {
            std::string s = "homogeneous " + std::to_string(r.m) + " " +
                            auctionlab::ToString(r.per_unit);
            for (int j : r.interest.Members()) s += " " + std::to_string(j);
            return s;
          },
          [](const ConcaveSymmetricRep& r) { return "concave " + JoinValues(r.f); },
      },
      rep_);
}

bool Allocation::IsValid(int m) const {
  ItemSet seen;
  for (ItemSet b : bundles) {
    if (!b.FitsIn(m) || b.Intersects(seen)) return false;
    seen = seen | b;
  }
  return true;
}

std::string Allocation::ToString() const {
  std::string s = "(";
  for (size_t i = 0; i < bundles.size(); ++i) {
    if (i) s += ", ";
    s += bundles[i].ToString();
  }
  return s + ")";
}

Rational Welfare(const std::vector<Valuation>& profile,
                 const Allocation& allocation) {
  if (profile.size() != allocation.bundles.size()) {
    throw std::invalid_argument("welfare: profile/allocation size mismatch");
  }
  Rational sum = 0;
  for (size_t i = 0; i < profile.size(); ++i) {
    sum += profile[i].Value(allocation.bundles[i]);
  }
  return sum;
}

WelfareOptimum OptimalWelfare(const std::vector<Valuation>& profile,
                              uint64_t cap) {
  if (profile.empty()) throw std::invalid_argument("optimal welfare: no bidders");
  const int n = static_cast<int>(profile.size());
  const int m = profile[0].num_items();
  for (const auto& v : profile) {
    if (v.num_items() != m) throw std::invalid_argument("optimal welfare: m mismatch");
  }
  uint64_t count = 1;
  for (int j = 0; j < m; ++j) {
    count *= static_cast<uint64_t>(n + 1);
    if (count > cap) throw CapExceeded("optimal welfare: (n+1)^m exceeds cap");
  }

  // owner[j] in [0, n]; n means unsold. Item m-1 is the fastest digit.
  std::vector<int> owner(m, 0);
  Allocation current{std::vector<ItemSet>(n)};
  for (int j = 0; j < m; ++j) current.bundles[0].insert(j);

  WelfareOptimum best{current, Welfare(profile, current)};
  while (true) {
    int j = m - 1;
    while (j >= 0 && owner[j] == n) {
      owner[j] = 0;
      current.bundles[0].insert(j);
      --j;
    }
    if (j < 0) break;
    if (owner[j] < n) current.bundles[owner[j]].erase(j);
    ++owner[j];
    if (owner[j] < n) current.bundles[owner[j]].insert(j);
    // Items after j were reset to bidder 0 above; they already sit there.
    Rational w = Welfare(profile, current);
    if (w > best.welfare) best = {current, w};
  }
  return best;
}

bool CheckPointwiseApprox(const Valuation& v, const Valuation& approx,
                          ItemSet target, const Rational& beta) {
  const int m = v.num_items();
  if (approx.num_items() != m) {
    throw std::invalid_argument("pointwise approx: item counts differ");
  }
  if (m > 20) throw CapExceeded("pointwise approx: 2^m exceeds 2^20");
  if (!target.FitsIn(m)) throw std::out_of_range("pointwise approx: target set");
  if (beta * approx.Value(target) < v.Value(target)) return false;
  bool ok = true;
  ForEachSubset(ItemSet::All(m), [&](ItemSet t) {
    if (ok && approx.Value(t) > v.Value(t)) ok = false;
  });
  return ok;
}

std::string FindMonotonicityViolation(const Valuation& v) {
  const int m = v.num_items();
  if (m > 20) throw CapExceeded("monotonicity: m > 20");
  std::vector<Rational> t = v.Tabulate();
  if (t[0] != 0) return "value of empty set is not 0";
  for (uint32_t s = 0; s < t.size(); ++s) {
    if (t[s] < 0) return "negative value at " + ItemSet(s).ToString();
    for (int j = 0; j < m; ++j) {
      uint32_t bigger = s | (1u << j);
      if (bigger != s && t[bigger] < t[s]) {
        return "not monotone: " + ItemSet(s).ToString() + " -> " +
               ItemSet(bigger).ToString();
      }
    }
  }
  return "";
}

}  // namespace auctionlab
