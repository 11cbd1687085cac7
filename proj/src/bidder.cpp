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

#include "leoauction/bidder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace leoauction {

std::vector<double> estimate_capacities(std::span<const double> row,
                                        std::span<const Flag> availability)
{
    if (row.size() != availability.size())
        throw std::invalid_argument("estimate_capacities: capacity and availability lengths differ");
    std::vector<double> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        out[i] = availability[i] ? row[i] : 0.0;
    return out;
}

std::vector<ScIndex> sort_by_capacity(std::span<const double> caps)
{
    std::vector<ScIndex> order(caps.size());
    std::iota(order.begin(), order.end(), ScIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](ScIndex a, ScIndex b) { return caps[a] > caps[b]; });
    return order;
}

std::size_t select_bid_count(std::span<const double> sorted_caps,
                             std::optional<std::size_t> max_bid_count)
{
    const std::size_t n = sorted_caps.size();
    const auto positive = static_cast<std::size_t>(
        std::count_if(sorted_caps.begin(), sorted_caps.end(), [](double c) { return c > 0.0; }));

    std::size_t count = 0;
    if (n < 2) {
        count = std::min<std::size_t>(1, positive);
    }
    else {
        const double tail = std::accumulate(sorted_caps.begin() + 1, sorted_caps.end(), 0.0);
        const double tail_mean = tail / static_cast<double>(n - 1);

        // running sum of (C_q - A); ties go to the larger j
        double objective = 0.0;
        double best = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            const double step = sorted_caps[j - 1] - tail_mean;
            objective += step;
            if (j == 1 || objective > best || (step >= 0.0 && objective >= best)) {
                best = objective;
                count = j;
            }
        }
        count = std::min(count, positive);
    }
    if (max_bid_count)
        count = std::min(count, *max_bid_count);
    return count;
}

std::vector<BidGroup> form_groups(std::vector<ScIndex> selected, std::span<const double> caps)
{
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    std::vector<BidGroup> groups;
    for (ScIndex sc : selected) {
        if (sc >= caps.size())
            throw std::out_of_range("form_groups: selected subcarrier outside the capacity row");
        if (groups.empty() || groups.back().end_sc() != sc)
            groups.push_back(BidGroup{sc, 0, {}});
        auto &g = groups.back();
        ++g.length;
        g.member_capacities.push_back(caps[sc]);
    }
    return groups;
}

std::vector<double> assign_ratios(std::span<const BidGroup> groups)
{
    std::vector<double> sums;
    sums.reserve(groups.size());
    for (const auto &g : groups)
        sums.push_back(std::accumulate(g.member_capacities.begin(), g.member_capacities.end(), 0.0));
    const double total = std::accumulate(sums.begin(), sums.end(), 0.0);
    if (!(total > 0.0))
        return {};
    for (double &s : sums)
        s /= total;
    return sums;
}

std::vector<BidMessage> build_bids(std::span<const double> capacity_row,
                                   std::span<const double> snr_row,
                                   std::span<const Flag> availability,
                                   std::optional<std::size_t> max_bid_count)
{
    if (snr_row.size() != capacity_row.size())
        throw std::invalid_argument("build_bids: capacity and SNR lengths differ");

    const auto caps = estimate_capacities(capacity_row, availability);
    const auto order = sort_by_capacity(caps);

    std::vector<double> sorted(order.size());
    std::transform(order.begin(), order.end(), sorted.begin(), [&](ScIndex i) { return caps[i]; });
    const std::size_t count = select_bid_count(sorted, max_bid_count);
    if (count == 0)
        return {};

    const std::vector<ScIndex> selected(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));
    const auto groups = form_groups(selected, caps);
    const auto ratios = assign_ratios(groups);
    if (ratios.empty())
        return {};

    std::vector<BidMessage> out;
    out.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto &grp = groups[g];
        double min_snr = snr_row[grp.start_sc];
        for (ScIndex i = grp.start_sc; i < grp.end_sc(); ++i)
            min_snr = std::min(min_snr, snr_row[i]);
        out.push_back(BidMessage{grp.start_sc, grp.length, ratios[g], 10.0 * std::log10(min_snr)});
    }
    return out;
}

}  // namespace leoauction
