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

#include "auctionlab/rational.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace auctionlab {

Rational Fraction(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& r) { return r.get_str(); }

double ToDouble(const Rational& r) { return r.get_d(); }

Rational Harmonic(int k) {
  Rational h = 0;
  for (int i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

namespace {

constexpr double kLogScale = 1099511627776.0;  // 2^40

bool IsPowerOfTwo(unsigned k) { return k != 0 && std::has_single_bit(k); }

}  // namespace

Rational Log2LowerBound(unsigned k) {
  if (k == 0) throw std::invalid_argument("log2 of zero");
  if (IsPowerOfTwo(k)) return Rational(std::bit_width(k) - 1);
  // log2 is accurate to a few ulps; backing off two grid steps is a safe
  // margin at this scale.
  double scaled = std::floor(std::log2(static_cast<double>(k)) * kLogScale) - 2;
  mpz_class num;
  num.set_str(std::to_string(static_cast<long long>(scaled)), 10);
  mpz_class den = 1;
  den <<= 40;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational Log2UpperBound(unsigned k) {
  if (k == 0) throw std::invalid_argument("log2 of zero");
  if (IsPowerOfTwo(k)) return Rational(std::bit_width(k) - 1);
  double scaled = std::ceil(std::log2(static_cast<double>(k)) * kLogScale) + 2;
  mpz_class num;
  num.set_str(std::to_string(static_cast<long long>(scaled)), 10);
  mpz_class den = 1;
  den <<= 40;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational BucketingBeta(int k) {
  if (k <= 0) throw std::invalid_argument("bucketing beta needs k >= 1");
  if (k == 1) return 1;
  return 2 * (Log2LowerBound(static_cast<unsigned>(k - 1)) + 1);
}

}  // namespace auctionlab
