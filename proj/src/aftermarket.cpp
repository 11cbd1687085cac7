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

#include "leoauction/aftermarket.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leoauction {

std::vector<FreeAssignment> assign_unsold(std::span<const ScIndex> unsold,
                                          std::span<const BidRecord> records, std::size_t radius)
{
    std::vector<FreeAssignment> out;
    if (radius == 0)
        return out;

    for (ScIndex sc : unsold) {
        std::optional<FreeAssignment> best;
        for (const auto &rec : records) {
            const auto &m = rec.message;
            if (m.length == 0 || m.covers(sc))
                continue;
            const ScIndex first = m.start_sc;
            const ScIndex last = m.start_sc + m.length - 1;
            // distance from sc to the nearest member of the group
            const std::size_t gap = sc < first ? first - sc : sc - last;
            if (gap > radius)
                continue;
            const bool better = !best || m.min_snr_db > best->snr_db ||
                                (m.min_snr_db == best->snr_db && rec.gs < best->gs);
            if (better)
                best = FreeAssignment{sc, rec.gs, m.min_snr_db};
        }
        if (best)
            out.push_back(*best);
    }
    return out;
}

void apply_free_assignments(AuctionOutcome &outcome, std::span<const FreeAssignment> assignments,
                            const CapacityGrid &grid)
{
    for (const auto &a : assignments) {
        if (a.sc >= outcome.allocation.size() || outcome.allocation.sold(a.sc))
            continue;
        outcome.allocation.winner[a.sc] = a.gs;
        outcome.allocation.deal_price[a.sc] = 0.0;
        outcome.allocation.winning_round[a.sc] = outcome.rounds_executed + 1;
        outcome.per_gs_won_capacity[a.gs] += grid.capacities(a.gs, a.sc);
    }
}

std::vector<ScIndex> unsold_subcarriers(const AllocationMap &allocation)
{
    std::vector<ScIndex> out;
    for (ScIndex sc = 0; sc < allocation.size(); ++sc)
        if (!allocation.sold(sc))
            out.push_back(sc);
    return out;
}

DealPriceHistory::DealPriceHistory(std::size_t num_sc, std::size_t window)
    : num_sc_(num_sc), window_(window), unsold_(num_sc, 0)
{
    if (window == 0)
        throw std::invalid_argument("DealPriceHistory: window must be >= 1");
}

void DealPriceHistory::record(const AllocationMap &allocation)
{
    std::vector<Flag> sold(allocation.size());
    for (ScIndex sc = 0; sc < allocation.size(); ++sc)
        sold[sc] = allocation.sold(sc) ? 1 : 0;
    record(allocation.deal_price, sold);
}

void DealPriceHistory::record(std::span<const double> prices, std::span<const Flag> sold)
{
    if (prices.size() != num_sc_ || sold.size() != num_sc_)
        throw std::invalid_argument("DealPriceHistory::record: size mismatch");

    Entry e{std::vector<double>(prices.size()), std::vector<Flag>(sold.begin(), sold.end())};
    for (ScIndex sc = 0; sc < prices.size(); ++sc)
        e.prices[sc] = sold[sc] ? prices[sc] : 0.0;

    if (entries_.size() == window_) {
        const auto &old = entries_.front();
        for (ScIndex sc = 0; sc < num_sc_; ++sc)
            unsold_[sc] -= old.sold[sc] ? 0 : 1;
        entries_.pop_front();
    }
    for (ScIndex sc = 0; sc < num_sc_; ++sc)
        unsold_[sc] += e.sold[sc] ? 0 : 1;
    entries_.push_back(std::move(e));
}

std::vector<double> DealPriceHistory::average_prices() const
{
    std::vector<double> avg(num_sc_, 0.0);
    for (const auto &e : entries_)
        for (ScIndex sc = 0; sc < avg.size(); ++sc)
            avg[sc] += e.prices[sc];
    for (double &a : avg)
        a /= static_cast<double>(window_);
    return avg;
}

std::vector<std::size_t> DealPriceHistory::unsold_counts() const { return unsold_; }

namespace {

double median_of(std::vector<double> v)
{
    const std::size_t n = v.size();
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (n % 2 == 1)
        return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(v.begin(), mid);
    return 0.5 * (lower + upper);
}

}  // namespace

DetectionResult detect_interference(std::span<const double> average_prices,
                                    double threshold_fraction)
{
    DetectionResult r;
    if (average_prices.empty()) {
        r.diagnostic = "no subcarriers to examine";
        return r;
    }
    if (std::all_of(average_prices.begin(), average_prices.end(), [](double p) { return p == 0.0; })) {
        r.diagnostic = "no subcarrier was sold in the window; deal prices carry no signal";
        return r;
    }
    const double threshold =
        threshold_fraction *
        median_of(std::vector<double>(average_prices.begin(), average_prices.end()));
    for (ScIndex sc = 0; sc < average_prices.size(); ++sc)
        if (average_prices[sc] < threshold)
            r.flagged.push_back(sc);
    return r;
}

DetectionResult detect_interference(const DealPriceHistory &history, double threshold_fraction)
{
    if (!history.full())
        throw std::logic_error("detect_interference: window holds " +
                               std::to_string(history.observed()) + " of " +
                               std::to_string(history.window()) + " auctions");
    return detect_interference(history.average_prices(), threshold_fraction);
}

std::vector<ScIndex> detect_by_unsold(const DealPriceHistory &history, double min_fraction)
{
    std::vector<ScIndex> out;
    const auto counts = history.unsold_counts();
    const double need = min_fraction * static_cast<double>(std::max<std::size_t>(1, history.observed()));
    for (ScIndex sc = 0; sc < counts.size(); ++sc)
        if (counts[sc] > 0 && static_cast<double>(counts[sc]) >= need)
            out.push_back(sc);
    return out;
}

ReloadResult reload_power(std::span<const double> power, std::span<const ScIndex> flagged)
{
    ReloadResult r;
    r.power.assign(power.begin(), power.end());

    std::vector<Flag> is_flagged(power.size(), 0);
    for (ScIndex sc : flagged) {
        if (sc >= power.size())
            throw std::out_of_range("reload_power: flagged SC outside the power vector");
        is_flagged[sc] = 1;
    }
    const auto n_flagged =
        static_cast<std::size_t>(std::count(is_flagged.begin(), is_flagged.end(), Flag{1}));
    if (n_flagged == 0)
        return r;
    if (n_flagged == power.size()) {
        r.diagnostic = "every subcarrier is flagged; power left unchanged";
        return r;
    }

    double freed = 0.0;
    for (ScIndex sc = 0; sc < power.size(); ++sc)
        if (is_flagged[sc])
            freed += power[sc];
    const double share = freed / static_cast<double>(power.size() - n_flagged);
    for (ScIndex sc = 0; sc < power.size(); ++sc)
        r.power[sc] = is_flagged[sc] ? 0.0 : power[sc] + share;
    return r;
}

}  // namespace leoauction
