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

#ifndef AUCTIONLAB_RATIONAL_H_
#define AUCTIONLAB_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace auctionlab {

// Exact arithmetic for every value, bid, price and payment.
using Rational = mpq_class;

// p/q in lowest terms. Throws std::invalid_argument when q == 0.
Rational Fraction(long p, long q);

// Parses "p", "p/q" or "-p/q"; the result is canonical. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

std::string ToString(const Rational& r);
double ToDouble(const Rational& r);

// H_k = 1 + 1/2 + ... + 1/k; H_0 = 0.
Rational Harmonic(int k);

// Rational bounds on log2(k) for k >= 1. Exact for powers of two; otherwise
// within 2^-40 of the true value, lower bound strictly below it and upper
// bound strictly above it.
Rational Log2LowerBound(unsigned k);
Rational Log2UpperBound(unsigned k);

// 2 * (log2(k - 1) + 1), the bucketing guarantee for k >= 2 items, rounded
// down to a rational. k == 1 yields 1 (a singleton is reproduced exactly).
Rational BucketingBeta(int k);

}  // namespace auctionlab

#endif  // AUCTIONLAB_RATIONAL_H_
