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

#include "auctionlab/history.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace auctionlab {

std::string Bid::ToString() const {
  return auctionlab::ToString(amount) + (plus ? "+" : "");
}

Bid ParseBid(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty bid");
  Bid b;
  std::string body = text;
  if (body.back() == '+') {
    b.plus = true;
    body.pop_back();
  }
  b.amount = ParseRational(body);
  if (b.amount < 0) throw std::invalid_argument("negative bid '" + text + "'");
  return b;
}

std::string MechanismName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kDraft: return "draft";
    case MechanismKind::kSingleItemDraft: return "single_item_draft";
    case MechanismKind::kSequentialItem: return "sequential";
  }
  return "unknown";
}

MechanismKind ParseMechanism(const std::string& name) {
  if (name == "draft") return MechanismKind::kDraft;
  if (name == "single_item_draft" || name == "rtc") {
    return MechanismKind::kSingleItemDraft;
  }
  if (name == "sequential") return MechanismKind::kSequentialItem;
  throw std::invalid_argument("unknown mechanism '" + name + "'");
}

namespace {

bool IsPermutation(const std::vector<int>& v, int size) {
  if (static_cast<int>(v.size()) != size) return false;
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < size; ++i) {
    if (sorted[i] != i) return false;
  }
  return true;
}

}  // namespace

MechanismConfig MechanismConfig::Make(MechanismKind kind, int n, int m) {
  MechanismConfig c;
  c.kind = kind;
  c.num_bidders = n;
  c.num_items = m;
  c.tie_break.resize(n);
  std::iota(c.tie_break.begin(), c.tie_break.end(), 0);
  if (kind == MechanismKind::kSequentialItem) {
    c.item_order.resize(m);
    std::iota(c.item_order.begin(), c.item_order.end(), 0);
  }
  return c;
}

void MechanismConfig::Validate() const {
  if (num_bidders < 1) throw std::invalid_argument("need at least one bidder");
  if (num_items < 0 || num_items > kMaxItems) {
    throw std::invalid_argument("item count out of range");
  }
  if (!IsPermutation(tie_break, num_bidders)) {
    throw std::invalid_argument("tie_break is not a permutation of the bidders");
  }
  if (kind == MechanismKind::kSequentialItem &&
      !IsPermutation(item_order, num_items)) {
    throw std::invalid_argument("item_order is not a permutation of the items");
  }
}

History::History(MechanismConfig config)
    : config_(std::move(config)), remaining_(ItemSet::All(config_.num_items)) {}

ItemSet History::Offered() const {
  if (config_.kind == MechanismKind::kSequentialItem) {
    int t = round();
    if (t >= config_.num_items) return ItemSet();
    return ItemSet::Single(config_.item_order[t]);
  }
  return remaining_;
}

int History::MaxPick() const {
  return config_.kind == MechanismKind::kDraft ? 0 : 1;
}

bool History::Finished() const { return Offered().empty(); }

ItemSet History::BundleOf(int bidder) const {
  ItemSet s;
  for (const auto& a : rounds_) {
    if (a.winner == bidder) s = s | a.bundle;
  }
  return s;
}

Rational History::PaidBy(int bidder) const {
  Rational total = 0;
  for (const auto& a : rounds_) {
    if (a.winner == bidder) total += a.bid.amount * a.bundle.size();
  }
  return total;
}

void History::Append(const Announcement& a) {
  rounds_.push_back(a);
  if (config_.kind == MechanismKind::kSequentialItem) {
    remaining_.erase(config_.item_order[rounds_.size() - 1]);
  } else {
    remaining_ = remaining_ - a.bundle;
  }
}

History History::Prefix(int rounds) const {
  History h(config_);
  for (int t = 0; t < rounds && t < round(); ++t) h.Append(rounds_[t]);
  return h;
}

std::string History::Key() const {
  std::string key;
  for (size_t t = 0; t < rounds_.size(); ++t) {
    if (t) key += ';';
    const auto& a = rounds_[t];
    key += std::to_string(a.winner) + ':' + a.bid.ToString() + ':' +
           std::to_string(a.bundle.bits());
  }
  return key;
}

}  // namespace auctionlab
