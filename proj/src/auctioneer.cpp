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

#include "leoauction/auctioneer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace leoauction {

Ledger Ledger::with_budgets(std::vector<double> budgets, bool rollover)
{
    Ledger l;
    l.balances.assign(budgets.size(), 0.0);
    l.budgets = std::move(budgets);
    l.rollover = rollover;
    return l;
}

Ledger fund_accounts(Ledger ledger)
{
    if (ledger.balances.size() != ledger.budgets.size())
        ledger.balances.resize(ledger.budgets.size(), 0.0);
    for (std::size_t n = 0; n < ledger.budgets.size(); ++n) {
        const double budget = std::max(0.0, ledger.budgets[n]);
        ledger.balances[n] = ledger.rollover ? ledger.balances[n] + budget : budget;
    }
    return ledger;
}

std::size_t AllocationMap::count_for(GsIndex gs) const
{
    return static_cast<std::size_t>(
        std::count_if(winner.begin(), winner.end(), [gs](const auto &w) { return w == gs; }));
}

AuctionPolicy AuctionPolicy::from_config(const ScenarioConfig &config)
{
    AuctionPolicy p;
    p.pricing = config.pricing;
    p.max_rounds = config.max_rounds;
    p.max_sc_per_gs = config.max_sc_per_gs;
    p.max_bid_count = config.max_bid_count.resolve(config.num_sc, config.num_gs);
    p.demands = config.resolved_demands();
    return p;
}

PricedRound price_bids(std::span<const std::vector<BidMessage>> messages,
                       std::span<const double> balances, std::size_t num_sc)
{
    if (messages.size() > balances.size())
        throw std::invalid_argument("price_bids: more bidders than ledger accounts");

    PricedRound out;
    out.per_sc.resize(num_sc);
    for (GsIndex n = 0; n < messages.size(); ++n) {
        double ratio_sum = 0.0;
        for (const auto &m : messages[n])
            ratio_sum += m.ratio;
        const double scale = ratio_sum > 1.0 ? 1.0 / ratio_sum : 1.0;
        const double funds = balances[n];

        for (const auto &m : messages[n]) {
            if (m.length == 0 || m.start_sc >= num_sc || m.length > num_sc - m.start_sc) {
                ++out.discarded;
                continue;
            }
            const double price = m.ratio * scale / static_cast<double>(m.length) * funds;
            for (ScIndex sc = m.start_sc; sc < m.start_sc + m.length; ++sc)
                out.per_sc[sc].push_back(PricedBid{n, price});
        }
    }
    return out;
}

RoundResult allocate_round(const PricedRound &bids, AllocationMap &allocation, Ledger &ledger,
                           const AuctionPolicy &policy, std::size_t round)
{
    const std::size_t num_sc = allocation.size();
    if (bids.per_sc.size() != num_sc)
        throw std::invalid_argument("allocate_round: bid table and allocation sizes differ");

    RoundResult result;
    result.charges.assign(ledger.size(), 0.0);

    std::vector<std::size_t> won(ledger.size(), 0);
    for (const auto &w : allocation.winner)
        if (w && *w < won.size())
            ++won[*w];

    struct Pending
    {
        ScIndex sc;
        double top;
    };
    std::vector<Pending> order;
    for (ScIndex sc = 0; sc < num_sc; ++sc) {
        const auto &b = bids.per_sc[sc];
        if (b.empty() || allocation.sold(sc))
            continue;
        double top = 0.0;
        for (const auto &pb : b)
            top = std::max(top, pb.price);
        order.push_back({sc, top});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Pending &a, const Pending &b) { return a.top > b.top; });

    const std::size_t cap = policy.max_sc_per_gs.value_or(std::numeric_limits<std::size_t>::max());
    auto eligible = [&](const PricedBid &pb) {
        return pb.price > 0.0 && pb.gs < won.size() && won[pb.gs] < cap;
    };

    for (const auto &[sc, top] : order) {
        const auto &b = bids.per_sc[sc];
        const PricedBid *best = nullptr;
        for (const auto &pb : b)
            if (eligible(pb) && (!best || pb.price > best->price ||
                                 (pb.price == best->price && pb.gs < best->gs)))
                best = &pb;
        if (!best)
            continue;

        double charge = best->price;
        if (policy.pricing == PricingPolicy::SecondPrice) {
            double runner_up = -1.0;
            for (const auto &pb : b)
                if (&pb != best && eligible(pb))
                    runner_up = std::max(runner_up, pb.price);
            if (runner_up >= 0.0)
                charge = runner_up;
        }
        charge = std::min(charge, ledger.balances[best->gs]);

        ledger.balances[best->gs] -= charge;
        ledger.history.push_back(Charge{best->gs, sc, round, charge});
        result.charges[best->gs] += charge;
        ++won[best->gs];

        allocation.winner[sc] = best->gs;
        allocation.deal_price[sc] = charge;
        allocation.winning_round[sc] = round;
        result.sold.push_back(sc);
    }
    return result;
}

std::vector<Flag> check_demands(std::span<const double> won_capacity,
                                std::span<const double> demands)
{
    std::vector<Flag> satisfied(won_capacity.size(), 0);
    for (std::size_t n = 0; n < won_capacity.size(); ++n) {
        const double demand =
            n < demands.size() ? demands[n] : std::numeric_limits<double>::infinity();
        satisfied[n] = won_capacity[n] >= demand ? 1 : 0;
    }
    return satisfied;
}

AuctionOutcome run_auction(const CapacityGrid &grid, Ledger &ledger, const AuctionPolicy &policy)
{
    const std::size_t num_gs = grid.num_gs();
    const std::size_t num_sc = grid.num_sc();
    if (ledger.budgets.size() != num_gs)
        throw std::invalid_argument("run_auction: ledger size differs from the number of GSs");
    if (policy.max_rounds == 0)
        throw std::invalid_argument("run_auction: max_rounds must be >= 1");

    ledger = fund_accounts(std::move(ledger));

    AuctionOutcome out;
    out.allocation = AllocationMap(num_sc);
    out.per_gs_won_capacity.assign(num_gs, 0.0);
    out.message_counts.assign(num_gs, 0);

    std::vector<Flag> available(num_sc, 1);
    auto satisfied = check_demands(out.per_gs_won_capacity, policy.demands);

    for (std::size_t round = 1; round <= policy.max_rounds; ++round) {
        if (std::all_of(satisfied.begin(), satisfied.end(), [](Flag f) { return f != 0; }))
            break;

        std::vector<std::vector<BidMessage>> received(num_gs);
        std::size_t sent = 0;
        for (GsIndex n = 0; n < num_gs; ++n) {
            if (satisfied[n])
                continue;
            for (const auto &m :
                 build_bids(grid.capacities.row(n), grid.snr.row(n), available, policy.max_bid_count)) {
                const PackedBid packed = encode_bid(m);
                const BidMessage rx = policy.quantize_wire ? decode_bid(packed) : m;
                received[n].push_back(rx);
                out.bid_records.push_back(BidRecord{n, round, rx, packed});
                ++out.message_counts[n];
                ++sent;
            }
        }
        if (sent == 0)
            break;

        const std::vector<double> snapshot = ledger.balances;
        const auto priced = price_bids(received, snapshot, num_sc);
        out.discarded_messages += priced.discarded;

        const auto result = allocate_round(priced, out.allocation, ledger, policy, round);
        out.rounds_executed = round;
        for (ScIndex sc : result.sold) {
            const GsIndex w = *out.allocation.winner[sc];
            out.per_gs_won_capacity[w] += grid.capacities(w, sc);
            available[sc] = 0;
        }
        satisfied = check_demands(out.per_gs_won_capacity, policy.demands);
        if (result.sold.empty())
            break;
    }

    out.overhead_bits.resize(num_gs);
    for (GsIndex n = 0; n < num_gs; ++n)
        out.overhead_bits[n] = overhead_bits(out.message_counts[n]);
    return out;
}

}  // namespace leoauction
