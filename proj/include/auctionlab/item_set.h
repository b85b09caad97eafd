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

#ifndef AUCTIONLAB_ITEM_SET_H_
#define AUCTIONLAB_ITEM_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace auctionlab {

// Largest item universe any routine accepts. Exhaustive routines impose
// their own, tighter caps.
inline constexpr int kMaxItems = 24;

// A subset of the items {0, ..., m-1}; bit j stands for item j.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(uint32_t bits) : bits_(bits) {}
  ItemSet(std::initializer_list<int> items);

  static ItemSet FromItems(const std::vector<int>& items);
  static constexpr ItemSet All(int m) {
    return ItemSet(m >= 32 ? ~0u : ((1u << m) - 1u));
  }
  static constexpr ItemSet Single(int j) { return ItemSet(1u << j); }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int j) const { return (bits_ >> j) & 1u; }
  constexpr bool IsSubsetOf(ItemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(ItemSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // True iff every member is an item index below m.
  constexpr bool FitsIn(int m) const { return IsSubsetOf(All(m)); }

  void insert(int j) { bits_ |= 1u << j; }
  void erase(int j) { bits_ &= ~(1u << j); }

  // Items in increasing index order.
  std::vector<int> Members() const;
  // The lowest-index `count` members (all of them if fewer).
  ItemSet Lowest(int count) const;

  std::string ToString() const;

  friend constexpr ItemSet operator|(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ | b.bits_);
  }
  friend constexpr ItemSet operator&(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & b.bits_);
  }
  friend constexpr ItemSet operator-(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ItemSet a, ItemSet b) = default;
  friend constexpr auto operator<=>(ItemSet a, ItemSet b) = default;

 private:
  uint32_t bits_ = 0;
};

// Calls fn(ItemSet) for every subset of `universe`, including the empty set
// and `universe` itself, in increasing bitmask order.
template <typename Fn>
void ForEachSubset(ItemSet universe, Fn&& fn) {
  uint32_t u = universe.bits();
  uint32_t s = 0;
  while (true) {
    fn(ItemSet(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

}  // namespace auctionlab

#endif  // AUCTIONLAB_ITEM_SET_H_
