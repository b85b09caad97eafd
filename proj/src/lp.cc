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

#include "auctionlab/lp.h"

#include <stdexcept>

namespace auctionlab {

LpSolution MaximizeWithOriginFeasible(
    const std::vector<Rational>& c,
    const std::vector<std::vector<Rational>>& a,
    const std::vector<Rational>& b) {
  const size_t nvars = c.size();
  const size_t nrows = a.size();
  if (b.size() != nrows) throw std::invalid_argument("lp: rhs size");
  for (const auto& row : a) {
    if (row.size() != nvars) throw std::invalid_argument("lp: row size");
  }
  for (const auto& rhs : b) {
    if (rhs < 0) throw std::invalid_argument("lp: negative rhs");
  }

  // Columns: [0, nvars) originals, [nvars, nvars + nrows) slacks, last rhs.
  const size_t ncols = nvars + nrows + 1;
  const size_t rhs_col = ncols - 1;
  std::vector<std::vector<Rational>> t(nrows, std::vector<Rational>(ncols));
  std::vector<size_t> basis(nrows);
  for (size_t r = 0; r < nrows; ++r) {
    for (size_t j = 0; j < nvars; ++j) t[r][j] = a[r][j];
    t[r][nvars + r] = 1;
    t[r][rhs_col] = b[r];
    basis[r] = nvars + r;
  }
  // Reduced costs of the maximization: z_j - c_j. Entering column has < 0.
  std::vector<Rational> z(ncols);
  for (size_t j = 0; j < nvars; ++j) z[j] = -c[j];

  while (true) {
    size_t enter = ncols;
    for (size_t j = 0; j < rhs_col; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;

    size_t leave = nrows;
    Rational best_ratio;
    for (size_t r = 0; r < nrows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][rhs_col] / t[r][enter];
      if (leave == nrows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == nrows) throw std::domain_error("lp: unbounded");

    Rational pivot = t[leave][enter];
    for (auto& cell : t[leave]) cell /= pivot;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational factor = t[r][enter];
      for (size_t j = 0; j < ncols; ++j) t[r][j] -= factor * t[leave][j];
    }
    if (z[enter] != 0) {
      Rational factor = z[enter];
      for (size_t j = 0; j < ncols; ++j) z[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.x.assign(nvars, Rational(0));
  for (size_t r = 0; r < nrows; ++r) {
    if (basis[r] < nvars) sol.x[basis[r]] = t[r][rhs_col];
  }
  sol.objective = 0;
  for (size_t j = 0; j < nvars; ++j) sol.objective += c[j] * sol.x[j];
  return sol;
}

}  // namespace auctionlab
