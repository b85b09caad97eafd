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

#include "auctionlab/spe.h"

#include <memory>
#include <optional>
#include <stdexcept>

#include "auctionlab/errors.h"

namespace auctionlab {

namespace {

struct State {
  ItemSet remaining;
  std::vector<ItemSet> bundles;

  std::vector<uint32_t> Key() const {
    std::vector<uint32_t> key{remaining.bits()};
    for (ItemSet b : bundles) key.push_back(b.bits());
    return key;
  }
};

struct Node {
  bool ok = false;
  std::string failure;
  std::vector<Rational> value;  // v_j(final bundle) minus payments from here on
  std::vector<Action> actions;
  SpeStage stage;
};

class Solver {
 public:
  Solver(MechanismConfig config, std::vector<Valuation> valuations,
         SpeOptions options)
      : config_(std::move(config)),
        valuations_(std::move(valuations)),
        options_(std::move(options)),
        n_(config_.num_bidders),
        rank_(n_) {
    for (int r = 0; r < n_; ++r) rank_[config_.tie_break[r]] = r;
  }

  const MechanismConfig& config() const { return config_; }
  uint64_t states() const { return memo_.size(); }

  State Root() const {
    return {ItemSet::All(config_.num_items), std::vector<ItemSet>(n_)};
  }

  State FromHistory(const History& h) const {
    State s{h.Remaining(), std::vector<ItemSet>(n_)};
    for (int i = 0; i < n_; ++i) s.bundles[i] = h.BundleOf(i);
    return s;
  }

  ItemSet Offered(const State& s) const {
    if (config_.kind != MechanismKind::kSequentialItem) return s.remaining;
    int t = config_.num_items - s.remaining.size();
    if (t >= config_.num_items) return ItemSet();
    return ItemSet::Single(config_.item_order[t]);
  }

  State Child(const State& s, int winner, ItemSet pick) const {
    State c = s;
    if (config_.kind == MechanismKind::kSequentialItem) {
      c.remaining = c.remaining - Offered(s);
    } else {
      c.remaining = c.remaining - pick;
    }
    if (winner >= 0) c.bundles[winner] = c.bundles[winner] | pick;
    return c;
  }

  const Node& Solve(const State& s) {
    auto key = s.Key();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= options_.state_cap) {
      throw CapExceeded("SPE state count exceeds cap " +
                        std::to_string(options_.state_cap));
    }
    Node node = Compute(s);
    return memo_.emplace(std::move(key), std::move(node)).first->second;
  }

 private:
  Node Fail(std::string why) {
    Node n;
    n.failure = std::move(why);
    return n;
  }

  Node Compute(const State& s) {
    const ItemSet offered = Offered(s);
    Node node;
    if (offered.empty()) {
      node.ok = true;
      for (int j = 0; j < n_; ++j) node.value.push_back(valuations_[j].Value(s.bundles[j]));
      node.actions.assign(n_, Action::Abstain());
      return node;
    }

    // Each bidder's pick if it wins, and everyone's continuation then.
    std::vector<ItemSet> pick(n_);
    std::vector<std::vector<Rational>> row(n_);
    for (int i = 0; i < n_; ++i) {
      bool first = true;
      for (int x : offered.Members()) {
        const Node& c = Solve(Child(s, i, ItemSet::Single(x)));
        if (!c.ok) return Fail(c.failure);
        if (first || c.value[i] > row[i][i]) {
          pick[i] = ItemSet::Single(x);
          row[i] = c.value;
          first = false;
        }
      }
    }
    std::vector<Rational> none;
    if (config_.kind == MechanismKind::kSequentialItem) {
      const Node& c = Solve(Child(s, -1, ItemSet()));
      if (!c.ok) return Fail(c.failure);
      none = c.value;
    } else {
      for (int j = 0; j < n_; ++j) none.push_back(valuations_[j].Value(s.bundles[j]));
    }

    const std::string state_key = SpeStateKey(s.remaining, s.bundles);
    std::optional<int> pinned;
    if (auto p = options_.pinned_supporters.find(state_key);
        p != options_.pinned_supporters.end()) {
      pinned = p->second;
    }
    const BidGrid& grid = options_.grid;
    const Bid zero{0, false};
    const bool zero_ok = grid.Contains(zero);

    std::vector<std::optional<Bid>> bids(n_);
    auto winner_of = [&](int skip) {
      int w = -1;
      for (int j = 0; j < n_; ++j) {
        if (j == skip || !bids[j]) continue;
        if (w < 0 || *bids[j] > *bids[w] ||
            (*bids[j] == *bids[w] && rank_[j] < rank_[w])) {
          w = j;
        }
      }
      return w;
    };
    auto payoff = [&](int j, int w) -> Rational {
      if (w < 0) return none[j];
      if (w == j) return row[j][j] - bids[j]->amount;
      return row[w][j];
    };
    auto stable = [&](int w) {
      for (int j = 0; j < n_; ++j) {
        Rational cur = payoff(j, w);
        int top = winner_of(j);
        Rational lose = top < 0 ? none[j] : row[top][j];
        if (lose > cur) return false;
        std::optional<Bid> g =
            top < 0 ? std::optional<Bid>(grid.bids().front())
                    : grid.LeastAbove(*bids[top], rank_[top] < rank_[j]);
        if (g && row[j][j] - g->amount > cur) return false;
      }
      return true;
    };
    auto accept = [&](int w, int k) {
      node.ok = true;
      node.stage = {w, w >= 0 ? *bids[w] : Bid{}, k, w >= 0 ? pick[w] : ItemSet()};
      for (int j = 0; j < n_; ++j) {
        node.value.push_back(payoff(j, w));
        node.actions.push_back(bids[j] ? Action{*bids[j], pick[j]} : Action::Abstain());
      }
    };

    auto affordable = [&](int j, const Rational& amount) {
      return !options_.undominated ||
             amount <= valuations_[j].Marginal(s.bundles[j], pick[j]);
    };

    for (int w : config_.tie_break) {
      Rational worst_loss = none[w];
      for (int k = 0; k < n_; ++k) {
        if (k != w && row[k][w] < worst_loss) worst_loss = row[k][w];
      }
      std::vector<int> supporters;
      if (pinned) {
        supporters.push_back(*pinned);
      } else {
        for (int k : config_.tie_break) supporters.push_back(k);
        supporters.push_back(-1);
      }
      for (const Bid& wb : grid.bids()) {
        // Past this price losing beats winning whatever the others do.
        if (row[w][w] - wb.amount < worst_loss) break;
        if (!affordable(w, wb.amount)) break;
        for (int k : supporters) {
          if (k == w) continue;
          const Bid kb{wb.amount, false};
          if (k >= 0 && (!grid.Contains(kb) || !affordable(k, kb.amount))) continue;
          for (int j = 0; j < n_; ++j) {
            bids[j] = zero_ok ? std::optional<Bid>(zero) : std::nullopt;
          }
          bids[w] = wb;
          if (k >= 0) bids[k] = kb;
          if (winner_of(-1) != w) continue;
          if (stable(w)) {
            accept(w, k);
            return node;
          }
        }
      }
    }
    bids.assign(n_, std::nullopt);
    if (stable(-1)) {
      accept(-1, -1);
      return node;
    }
    return Fail("no stage equilibrium on the grid at state " + state_key);
  }

  MechanismConfig config_;
  std::vector<Valuation> valuations_;
  SpeOptions options_;
  int n_;
  std::vector<int> rank_;
  std::map<std::vector<uint32_t>, Node> memo_;
};

class SpePlan final : public BidPlan {
 public:
  explicit SpePlan(std::shared_ptr<Solver> solver) : solver_(std::move(solver)) {}

  Action Act(const History& h, int self) const override {
    const Node& node = solver_->Solve(solver_->FromHistory(h));
    if (!node.ok) return Action::Abstain();
    Action a = node.actions.at(self);
    if (!a.demand.IsSubsetOf(h.Offered())) return Action::Abstain();
    return a;
  }

  std::string Describe() const override { return "spe"; }
  bool ObservesBidAmounts() const override { return false; }

 private:
  std::shared_ptr<Solver> solver_;
};

}  // namespace

std::string SpeStateKey(ItemSet remaining, const std::vector<ItemSet>& bundles) {
  std::string key = "r" + remaining.ToString();
  for (ItemSet b : bundles) key += "|" + b.ToString();
  return key;
}

std::string SpeRootKey(const MechanismConfig& config) {
  return SpeStateKey(ItemSet::All(config.num_items),
                     std::vector<ItemSet>(config.num_bidders));
}

SpeResult SolveSpe(const MechanismConfig& config,
                   const std::vector<Valuation>& valuations,
                   const SpeOptions& options) {
  config.Validate();
  if (config.kind == MechanismKind::kDraft) {
    throw std::invalid_argument(
        "SPE solver handles single-item drafts and sequential auctions only");
  }
  if (static_cast<int>(valuations.size()) != config.num_bidders) {
    throw std::invalid_argument("valuation count does not match bidders");
  }
  if (options.grid.empty()) throw std::invalid_argument("empty bid grid");
  for (const auto& [key, k] : options.pinned_supporters) {
    if (k < 0 || k >= config.num_bidders) {
      throw std::invalid_argument("pinned supporter out of range at " + key);
    }
  }

  auto solver = std::make_shared<Solver>(config, valuations, options);
  SpeResult result;
  result.report.kind = EquilibriumKind::kSpe;
  result.report.opt_welfare = OptimalWelfare(valuations).welfare;

  const Node& root = solver->Solve(solver->Root());
  result.states = solver->states();
  if (!root.ok) {
    result.report.note = root.failure;
    return result;
  }

  State s = solver->Root();
  while (true) {
    const Node& node = solver->Solve(s);
    if (solver->Offered(s).empty()) break;
    result.path.push_back(node.stage);
    if (node.stage.winner < 0 && config.kind != MechanismKind::kSequentialItem) break;
    s = solver->Child(s, node.stage.winner, node.stage.pick);
  }
  result.predicted_welfare = 0;
  for (int j = 0; j < config.num_bidders; ++j) {
    result.predicted_welfare += valuations[j].Value(s.bundles[j]);
  }

  for (int j = 0; j < config.num_bidders; ++j) {
    result.plans.push_back(std::make_shared<SpePlan>(solver));
  }
  Outcome outcome = RunAuction(config, result.plans);
  Rational welfare = OutcomeWelfare(outcome, valuations);
  if (welfare != result.predicted_welfare) {
    throw std::logic_error("SPE path does not replay through the engine");
  }
  Rational revenue = Revenue(outcome);
  result.report.equilibria.push_back(
      {"spe", result.plans, std::move(outcome), std::move(welfare), std::move(revenue)});
  result.report.profiles_checked = 1;
  result.report.Summarize();
  result.states = solver->states();
  result.solved = true;
  return result;
}

SpeResult SolveSpeSingleItemDraft(const std::vector<Valuation>& valuations,
                                  const std::vector<int>& tie_break,
                                  const SpeOptions& options) {
  if (valuations.empty()) throw std::invalid_argument("no bidders");
  MechanismConfig config = MechanismConfig::Make(
      MechanismKind::kSingleItemDraft, static_cast<int>(valuations.size()),
      valuations.front().num_items());
  if (!tie_break.empty()) config.tie_break = tie_break;
  return SolveSpe(config, valuations, options);
}

SpeResult SolveSpeSequential(const std::vector<Valuation>& valuations,
                             const std::vector<int>& item_order,
                             const std::vector<int>& tie_break,
                             const SpeOptions& options) {
  if (valuations.empty()) throw std::invalid_argument("no bidders");
  MechanismConfig config = MechanismConfig::Make(
      MechanismKind::kSequentialItem, static_cast<int>(valuations.size()),
      valuations.front().num_items());
  if (!item_order.empty()) config.item_order = item_order;
  if (!tie_break.empty()) config.tie_break = tie_break;
  return SolveSpe(config, valuations, options);
}

}  // namespace auctionlab
