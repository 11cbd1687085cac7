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

#ifndef LEOAUCTION_AFTERMARKET_HPP
#define LEOAUCTION_AFTERMARKET_HPP

#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leoauction/auctioneer.hpp"

namespace leoauction {

struct FreeAssignment
{
    ScIndex sc = 0;
    GsIndex gs = 0;
    double snr_db = 0.0;  // min-SNR field of the adjacent group that decided it
};

// Gives every unsold SC for free to the GS whose recorded bid group lying
// within `radius` SCs of it reports the highest min-SNR field. SCs with no
// nearby bid stay idle.
std::vector<FreeAssignment> assign_unsold(std::span<const ScIndex> unsold,
                                          std::span<const BidRecord> records,
                                          std::size_t radius = 1);

// Applies free assignments to an outcome: winner set, price 0, won capacity
// credited from the grid. Sold SCs are never touched.
void apply_free_assignments(AuctionOutcome &outcome, std::span<const FreeAssignment> assignments,
                            const CapacityGrid &grid);

std::vector<ScIndex> unsold_subcarriers(const AllocationMap &allocation);

// Deal prices of the last `window` auctions. Unsold and free SCs count as
// price 0.
class DealPriceHistory
{
public:
    DealPriceHistory(std::size_t num_sc, std::size_t window);

    void record(const AllocationMap &allocation);
    void record(std::span<const double> prices, std::span<const Flag> sold);

    std::size_t num_sc() const { return num_sc_; }
    std::size_t window() const { return window_; }
    std::size_t observed() const { return entries_.size(); }
    bool full() const { return entries_.size() == window_; }

    // sum / W over the window
    std::vector<double> average_prices() const;
    std::vector<std::size_t> unsold_counts() const;

private:
    struct Entry
    {
        std::vector<double> prices;
        std::vector<Flag> sold;
    };

    std::size_t num_sc_;
    std::size_t window_;
    std::deque<Entry> entries_;
    std::vector<std::size_t> unsold_;
};

struct DetectionResult
{
    std::vector<ScIndex> flagged;
    std::optional<std::string> diagnostic;
};

// Flags SC i when average_prices[i] < threshold_fraction * median.
DetectionResult detect_interference(std::span<const double> average_prices,
                                    double threshold_fraction = 0.5);
// Requires a fully populated window.
DetectionResult detect_interference(const DealPriceHistory &history,
                                    double threshold_fraction = 0.5);

// Sale-record detector: flags SCs left unsold in at least `min_fraction` of
// the window.
std::vector<ScIndex> detect_by_unsold(const DealPriceHistory &history, double min_fraction = 0.5);

struct ReloadResult
{
    std::vector<double> power;
    std::optional<std::string> diagnostic;
};

// Moves the power of flagged SCs evenly onto the others; total conserved.
ReloadResult reload_power(std::span<const double> power, std::span<const ScIndex> flagged);

}  // namespace leoauction

#endif  // LEOAUCTION_AFTERMARKET_HPP
