// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The leoauction Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LEOAUCTION_AUCTIONEER_HPP
#define LEOAUCTION_AUCTIONEER_HPP

#include <optional>
#include <span>
#include <vector>

#include "leoauction/bidder.hpp"
#include "leoauction/channel.hpp"
#include "leoauction/codec.hpp"
#include "leoauction/config.hpp"

namespace leoauction {

struct Charge
{
    GsIndex gs = 0;
    ScIndex sc = 0;
    std::size_t round = 0;
    double amount = 0.0;
};

// Satellite-side accounts. Balances never go negative.
struct Ledger
{
    std::vector<double> balances;
    std::vector<double> budgets;
    bool rollover = false;
    std::vector<Charge> history;

    static Ledger with_budgets(std::vector<double> budgets, bool rollover);
    std::size_t size() const { return balances.size(); }
};

// Start of an auction: top up (rollover) or reset to the budget.
Ledger fund_accounts(Ledger ledger);

struct AllocationMap
{
    std::vector<std::optional<GsIndex>> winner;
    std::vector<double> deal_price;
    std::vector<std::optional<std::size_t>> winning_round;

    explicit AllocationMap(std::size_t num_sc = 0)
        : winner(num_sc), deal_price(num_sc, 0.0), winning_round(num_sc)
    {
    }

    std::size_t size() const { return winner.size(); }
    bool sold(ScIndex sc) const { return winner[sc].has_value(); }
    std::size_t count_for(GsIndex gs) const;
};

struct AuctionPolicy
{
    PricingPolicy pricing = PricingPolicy::FirstPrice;
    std::size_t max_rounds = 4;
    std::optional<std::size_t> max_sc_per_gs;
    std::optional<std::size_t> max_bid_count;
    std::vector<double> demands;  // empty: unbounded for every GS
    // price the decoded 40-bit messages rather than the originals
    bool quantize_wire = true;

    static AuctionPolicy from_config(const ScenarioConfig &config);
};

struct PricedBid
{
    GsIndex gs = 0;
    double price = 0.0;
};

struct PricedRound
{
    std::vector<std::vector<PricedBid>> per_sc;  // bids on each SC, in GS order
    std::size_t discarded = 0;                   // messages rejected as out of range
};

// Per-SC price (b / length) * M_n for every message, M_n taken from the
// balances snapshot. A GS's received ratios are scaled down if
// quantization pushed their sum above 1.
PricedRound price_bids(std::span<const std::vector<BidMessage>> messages,
                       std::span<const double> balances, std::size_t num_sc);

struct RoundResult
{
    std::vector<double> charges;  // per GS
    std::vector<ScIndex> sold;    // in processing order
};

// Sells every bid-carrying SC to its highest eligible positive bid, in
// descending order of the top offered price. Charges first or second price
// and deducts it from the ledger.
RoundResult allocate_round(const PricedRound &bids, AllocationMap &allocation, Ledger &ledger,
                           const AuctionPolicy &policy, std::size_t round);

// GS n is satisfied when its won capacity reaches demands[n].
std::vector<Flag> check_demands(std::span<const double> won_capacity,
                                std::span<const double> demands);

struct BidRecord
{
    GsIndex gs = 0;
    std::size_t round = 0;
    BidMessage message;  // as received by the satellite
    PackedBid packed;
};

struct AuctionOutcome
{
    AllocationMap allocation;
    std::vector<double> per_gs_won_capacity;
    std::vector<BidRecord> bid_records;
    std::vector<std::size_t> message_counts;
    std::vector<std::size_t> overhead_bits;
    std::size_t rounds_executed = 0;
    std::size_t discarded_messages = 0;
};

// Full multi-round auction over one capacity grid. The ledger is funded at
// the start and carries the final balances afterwards.
AuctionOutcome run_auction(const CapacityGrid &grid, Ledger &ledger, const AuctionPolicy &policy);

}  // namespace leoauction

#endif  // LEOAUCTION_AUCTIONEER_HPP
