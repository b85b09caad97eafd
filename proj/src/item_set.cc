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

#include "auctionlab/item_set.h"

#include <sstream>
#include <stdexcept>

namespace auctionlab {

ItemSet::ItemSet(std::initializer_list<int> items) {
  for (int j : items) {
    if (j < 0 || j >= kMaxItems) throw std::out_of_range("item index");
    insert(j);
  }
}

ItemSet ItemSet::FromItems(const std::vector<int>& items) {
  ItemSet s;
  for (int j : items) {
    if (j < 0 || j >= kMaxItems) throw std::out_of_range("item index");
    if (s.contains(j)) throw std::invalid_argument("duplicate item");
    s.insert(j);
  }
  return s;
}

std::vector<int> ItemSet::Members() const {
  std::vector<int> out;
  for (uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

ItemSet ItemSet::Lowest(int count) const {
  ItemSet out;
  for (uint32_t b = bits_; b != 0 && count > 0; b &= b - 1, --count) {
    out.insert(std::countr_zero(b));
  }
  return out;
}

std::string ItemSet::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j : Members()) {
    if (!first) os << ',';
    os << j;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace auctionlab
