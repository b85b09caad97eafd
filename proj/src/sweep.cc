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

#include "auctionlab/sweep.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace auctionlab {
namespace {

Rational RandomValue(std::mt19937_64& rng, int den) {
  return Fraction(RandomInt(rng, 0, den), den);
}

std::vector<Rational> RandomVector(std::mt19937_64& rng, int m, int den) {
  std::vector<Rational> v;
  for (int j = 0; j < m; ++j) v.push_back(RandomValue(rng, den));
  return v;
}

std::string Opt(const std::optional<Rational>& r) { return r ? ToString(*r) : ""; }

std::string Decimal(const std::optional<Rational>& r) {
  if (!r) return "";
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << ToDouble(*r);
  return os.str();
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

int RandomInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Valuation RandomUnitDemand(std::mt19937_64& rng, int m, int den) {
  return Valuation::UnitDemand(RandomVector(rng, m, den));
}

Valuation RandomAdditive(std::mt19937_64& rng, int m, int den) {
  return Valuation::Additive(RandomVector(rng, m, den));
}

Valuation RandomHomogeneous(std::mt19937_64& rng, int m, int den) {
  uint32_t bits = 0;
  while (bits == 0) bits = static_cast<uint32_t>(RandomInt(rng, 0, (1 << m) - 1));
  return Valuation::ConstraintHomogeneous(m, ItemSet(bits),
                                          Fraction(RandomInt(rng, 1, den), den));
}

Valuation RandomConcaveSymmetric(std::mt19937_64& rng, int m, int den) {
  std::vector<int> steps;
  for (int k = 0; k < m; ++k) steps.push_back(RandomInt(rng, 0, den));
  std::sort(steps.rbegin(), steps.rend());
  std::vector<Rational> f{0};
  for (int d : steps) f.push_back(f.back() + Fraction(d, den));
  return Valuation::ConcaveSymmetric(std::move(f));
}

Valuation RandomXos(std::mt19937_64& rng, int m, int den, int clauses) {
  std::vector<std::vector<Rational>> cs;
  for (int k = 0; k < clauses; ++k) cs.push_back(RandomVector(rng, m, den));
  return Valuation::Xos(m, std::move(cs));
}

Valuation RandomSubadditiveTable(std::mt19937_64& rng, int m, int den) {
  Valuation x = RandomXos(rng, m, den, 2);
  Rational c = RandomValue(rng, den);
  std::vector<Rational> table(size_t{1} << m);
  for (uint32_t s = 0; s < table.size(); ++s) {
    ItemSet set(s);
    table[s] = std::max<Rational>(x.Value(set), c * ((set.size() + 1) / 2));
  }
  return Valuation::ExplicitTable(m, std::move(table), true);
}

std::vector<SweepRow> RunSweep(const SweepOptions& o) {
  if (o.n < 1 || o.m < 1 || o.m > kMaxItems) throw std::invalid_argument("bad sweep size");
  if (o.den < 1 || o.step <= 0) throw std::invalid_argument("bad sweep resolution");
  std::mt19937_64 rng(o.seed);
  const BidGrid candidates = BidGrid::Uniform(o.step, 1, o.plus_candidates);
  const BidGrid deviations = BidGrid::Uniform(o.step, 1, true);

  std::vector<SweepRow> rows;
  for (int k = 0; k < o.instances; ++k) {
    SweepRow row;
    row.instance = k;
    row.n = o.vary_size ? RandomInt(rng, 1, o.n) : o.n;
    row.m = o.vary_size ? RandomInt(rng, 1, o.m) : o.m;
    std::vector<Valuation> vals;
    for (int i = 0; i < row.n; ++i) {
      if (o.family == "unit_demand") vals.push_back(RandomUnitDemand(rng, row.m, o.den));
      else if (o.family == "additive") vals.push_back(RandomAdditive(rng, row.m, o.den));
      else if (o.family == "homogeneous") vals.push_back(RandomHomogeneous(rng, row.m, o.den));
      else if (o.family == "concave") vals.push_back(RandomConcaveSymmetric(rng, row.m, o.den));
      else if (o.family == "xos") vals.push_back(RandomXos(rng, row.m, o.den, 2));
      else if (o.family == "subadditive") vals.push_back(RandomSubadditiveTable(rng, row.m, o.den));
      else throw std::invalid_argument("unknown sweep family '" + o.family + "'");
    }
    for (size_t i = 0; i < vals.size(); ++i) {
      row.valuations += (i ? "; " : "") + vals[i].ToString();
    }
    MechanismConfig config = MechanismConfig::Make(o.kind, row.n, row.m);
    GameInstance instance = MakeGridInstance(config, vals, candidates, deviations, o.rules);
    row.opt = OptimalWelfare(vals).welfare;

    if (o.nash) {
      EquilibriumReport rep = EnumeratePureNash(instance, {}, o.cap);
      row.equilibria = rep.equilibria.size();
      for (const auto& e : rep.equilibria) {
        if (!row.min_welfare || e.welfare < *row.min_welfare) row.min_welfare = e.welfare;
        if (!row.max_welfare || e.welfare > *row.max_welfare) row.max_welfare = e.welfare;
      }
      row.poa = rep.poa;
      if (row.min_welfare && *row.min_welfare > 0) {
        row.slack = 2 * row.n * o.step / *row.min_welfare;
      }
    }
    if (o.smoothness) {
      if (o.family == "unit_demand") {
        row.certificate = CheckSmoothness(instance, UnitDemandFamily(), Rational(1, 2), 2);
      } else if (o.family == "homogeneous") {
        row.certificate = CheckSmoothness(instance, CoreFamily(), Rational(1, 4), 2);
      } else {
        Approximator a = o.family == "additive" ? Approximator::kAdditive
                         : o.family == "concave" ? Approximator::kConcaveSymmetric
                         : o.family == "xos"     ? Approximator::kXos
                                                 : Approximator::kSubadditive;
        row.certificate = CheckSmoothnessViaExtension(instance, a, Rational(1, 4), 2);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "# auctionlab sweep v1\n"
     << "instance,n,m,opt,equilibria,min_welfare,max_welfare,poa,poa_decimal,slack,"
        "lambda,mu,margin,margin_decimal,holds,valuations\n";
  for (const auto& r : rows) {
    os << r.instance << ',' << r.n << ',' << r.m << ',' << ToString(r.opt) << ','
       << r.equilibria << ',' << Opt(r.min_welfare) << ',' << Opt(r.max_welfare) << ','
       << Opt(r.poa) << ',' << Decimal(r.poa) << ',' << ToString(r.slack) << ',';
    if (r.certificate) {
      const auto& c = *r.certificate;
      os << ToString(c.lambda) << ',' << ToString(c.mu) << ',' << ToString(c.worst_margin)
         << ',' << Decimal(c.worst_margin) << ',' << (c.holds ? "true" : "false") << ',';
    } else {
      os << ",,,,,";
    }
    os << Quote(r.valuations) << '\n';
  }
  return os.str();
}

}  // namespace auctionlab
