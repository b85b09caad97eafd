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

#ifndef AUCTIONLAB_HISTORY_H_
#define AUCTIONLAB_HISTORY_H_

#include <compare>
#include <string>
#include <vector>

#include "auctionlab/item_set.h"
#include "auctionlab/rational.h"

namespace auctionlab {

// A sealed bid. `plus` marks a bid infinitesimally above `amount`: it beats
// every bid of the same amount without the mark, yet pays exactly `amount`.
struct Bid {
  Rational amount = 0;
  bool plus = false;

  std::string ToString() const;
  friend bool operator==(const Bid&, const Bid&) = default;
  friend std::strong_ordering operator<=>(const Bid& a, const Bid& b) {
    if (a.amount < b.amount) return std::strong_ordering::less;
    if (a.amount > b.amount) return std::strong_ordering::greater;
    return a.plus <=> b.plus;
  }
};

// Parses "3/2" or "3/2+".
Bid ParseBid(const std::string& text);

// What a bidder submits in one round. An empty demand means the bidder sits
// the round out: its bid is ignored and it cannot win.
struct Action {
  Bid bid;
  ItemSet demand;

  static Action Abstain() { return {}; }
  bool abstains() const { return demand.empty(); }
  friend bool operator==(const Action&, const Action&) = default;
};

enum class MechanismKind { kDraft, kSingleItemDraft, kSequentialItem };

std::string MechanismName(MechanismKind kind);
MechanismKind ParseMechanism(const std::string& name);

struct MechanismConfig {
  MechanismKind kind = MechanismKind::kDraft;
  int num_bidders = 0;
  int num_items = 0;
  std::vector<int> item_order;  // kSequentialItem only: a permutation of [m]
  std::vector<int> tie_break;   // bidder priority, highest first

  // Identity tie-break and, for sequential auctions, identity order.
  static MechanismConfig Make(MechanismKind kind, int n, int m);

  // Throws std::invalid_argument if the orders are not permutations.
  void Validate() const;
};

// One public announcement. winner == -1 records an unsold sequential round.
struct Announcement {
  int winner = -1;
  Bid bid;
  ItemSet bundle;
};

// The public history observed at the start of a round.
class History {
 public:
  explicit History(MechanismConfig config);

  const MechanismConfig& config() const { return config_; }
  int round() const { return static_cast<int>(rounds_.size()); }
  const std::vector<Announcement>& announcements() const { return rounds_; }

  // Items not yet sold (draft formats) or not yet offered (sequential).
  ItemSet Remaining() const { return remaining_; }
  // Items the round's winner may take from.
  ItemSet Offered() const;
  // Largest demand the mechanism accepts; 0 means unlimited.
  int MaxPick() const;
  bool Finished() const;

  ItemSet BundleOf(int bidder) const;
  Rational PaidBy(int bidder) const;

  void Append(const Announcement& a);
  History Prefix(int rounds) const;

  // Canonical text key, e.g. "1:51+:4;2:0:2". Empty for the opening round.
  std::string Key() const;

 private:
  MechanismConfig config_;
  std::vector<Announcement> rounds_;
  ItemSet remaining_;
};

}  // namespace auctionlab

#endif  // AUCTIONLAB_HISTORY_H_
