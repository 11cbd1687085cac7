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

#ifndef LEOAUCTION_BIDDER_HPP
#define LEOAUCTION_BIDDER_HPP

#include <optional>
#include <span>
#include <vector>

#include "leoauction/common.hpp"

namespace leoauction {

// A run of contiguous subcarriers [start_sc, start_sc + length) a GS bids on
// with a single message.
struct BidGroup
{
    ScIndex start_sc = 0;
    std::size_t length = 0;
    std::vector<double> member_capacities;

    ScIndex end_sc() const { return start_sc + length; }  // one past the last member
};

// The four mandatory fields of one group bid.
struct BidMessage
{
    ScIndex start_sc = 0;
    std::size_t length = 1;
    double ratio = 0.0;
    double min_snr_db = 0.0;

    bool covers(ScIndex sc) const { return sc >= start_sc && sc < start_sc + length; }
    bool operator==(const BidMessage &) const = default;
};

// Zeroes the capacity of subcarriers that are no longer available.
std::vector<double> estimate_capacities(std::span<const double> row,
                                        std::span<const Flag> availability);

// SC indices ordered by descending capacity; equal capacities keep
// ascending index order.
std::vector<ScIndex> sort_by_capacity(std::span<const double> caps);

// Number of top-capacity subcarriers to bid on. With A the mean of all
// capacities but the largest, this is the largest j maximizing
//   sum_{q<=j} C_q - j*A + (sum_q C_q - S*C_1)/(S-1)
// clamped to the number of strictly positive capacities and to
// max_bid_count. `sorted_caps` must be in descending order.
std::size_t select_bid_count(std::span<const double> sorted_caps,
                             std::optional<std::size_t> max_bid_count = std::nullopt);

// Splits the selected subcarriers into maximal runs of consecutive indices.
std::vector<BidGroup> form_groups(std::vector<ScIndex> selected, std::span<const double> caps);

// Capacity share of every group; empty when the groups carry no capacity.
std::vector<double> assign_ratios(std::span<const BidGroup> groups);

// One bidding round of a GS: mask, sort, select, group, weight.
std::vector<BidMessage> build_bids(std::span<const double> capacity_row,
                                   std::span<const double> snr_row,
                                   std::span<const Flag> availability,
                                   std::optional<std::size_t> max_bid_count = std::nullopt);

}  // namespace leoauction

#endif  // LEOAUCTION_BIDDER_HPP
