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

#ifndef LEOAUCTION_HARNESS_HPP
#define LEOAUCTION_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leoauction/aftermarket.hpp"
#include "leoauction/auctioneer.hpp"
#include "leoauction/baselines.hpp"
#include "leoauction/channel.hpp"
#include "leoauction/config.hpp"

namespace leoauction {

struct TrialMetrics
{
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t grid_hash = 0;  // all three allocators saw this grid

    std::vector<double> auction_capacity;  // per GS, bit/s, aftermarket included
    std::vector<double> random_capacity;
    std::vector<double> limit_capacity;

    std::vector<std::size_t> message_counts;
    std::vector<std::size_t> overhead_bits;
    std::size_t rounds = 0;

    AllocationMap allocation;    // after the aftermarket
    std::vector<Flag> sold;      // sold in the main auction
    std::vector<Flag> free;      // handed out by the aftermarket
    double reloaded_auction_total = 0.0;  // auction total after power reloading
};

struct RunSummary
{
    double auction_mean = 0.0;  // mean per-GS capacity over GSs and trials
    double random_mean = 0.0;
    double limit_mean = 0.0;
    double overhead_mean_bits = 0.0;  // per GS per auction
    std::size_t fairness_wins = 0;    // trials with auction std < limit std
    std::size_t dominance_violations = 0;
    double mean_unsold_after_aftermarket = 0.0;
    double auction_total_mean = 0.0;
    double reloaded_total_mean = 0.0;
};

struct RunMetrics
{
    ScenarioConfig config;
    std::vector<TrialMetrics> trials;
    std::vector<double> average_deal_price;  // over the detector window
    std::vector<std::size_t> sold_counts;     // main-auction sales per SC
    std::vector<std::size_t> free_counts;
    DetectionResult detection;
    std::vector<ScIndex> unsold_detection;  // sale-record detector, same window
    RunSummary summary;
};

double population_stddev(std::span<const double> values);
double mean_of(std::span<const double> values);

// Order-sensitive FNV-1a hash of a grid's capacities.
std::uint64_t grid_hash(const CapacityGrid &grid);

// One Monte Carlo trial at the config's transmit power.
TrialMetrics run_trial(const ScenarioConfig &config, std::size_t trial);

// Trials base_seed+0 .. base_seed+trials-1, run in parallel, aggregated in
// trial order. Includes interference detection and power reloading.
RunMetrics run_trials(const ScenarioConfig &config);

struct SweepPoint
{
    double tx_power_db = 0.0;
    double auction_mean = 0.0;
    double random_mean = 0.0;
    double limit_mean = 0.0;
    std::optional<double> gap_db;  // extra power random needs to match the auction
};

struct SweepResult
{
    std::vector<SweepPoint> points;
    std::optional<double> mean_gap_db;
};

// Power at which the piecewise-linear curve (powers_db, values) reaches
// `target`; nullopt outside the curve's range. Values must be increasing.
std::optional<double> interpolate_power_db(std::span<const double> powers_db,
                                           std::span<const double> values, double target);

// Horizontal offsets between `upper` and `lower` curves sampled on the same
// power grid; entries are missing where `lower` never reaches `upper`.
std::vector<std::optional<double>> horizontal_gaps_db(std::span<const double> powers_db,
                                                      std::span<const double> upper,
                                                      std::span<const double> lower);

// Mean per-GS capacity of the three allocators at every point of
// tx_power_db_grid.
SweepResult power_sweep(const ScenarioConfig &config);

// Writes the six CSV tables and run.json under out_dir. Throws IoError.
void export_results(const RunMetrics &metrics, const SweepResult *sweep,
                    const std::filesystem::path &out_dir);

// Reads mean_deal_price from an exported deal_price.csv.
std::vector<double> read_deal_prices(const std::filesystem::path &csv);

}  // namespace leoauction

#endif  // LEOAUCTION_HARNESS_HPP
