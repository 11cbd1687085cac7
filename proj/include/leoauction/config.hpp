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

#ifndef LEOAUCTION_CONFIG_HPP
#define LEOAUCTION_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leoauction/common.hpp"

namespace leoauction {

// Extra noise-like power added on the inclusive subcarrier range
// [start_sc, end_sc].
struct InterferenceProfile
{
    ScIndex start_sc = 0;
    ScIndex end_sc = 0;
    double power = 0.0;  // linear, same reference as noise_power

    bool operator==(const InterferenceProfile &) const = default;
};

enum class PricingPolicy { FirstPrice, SecondPrice };

// Per-round cap on how many SCs one GS bids for. FairShare resolves to
// max(1, round(fraction * S / N)).
struct BidCountCap
{
    enum class Kind { Unlimited, Fixed, FairShare };

    Kind kind = Kind::FairShare;
    std::size_t fixed = 0;
    double fraction = 0.75;

    static BidCountCap unlimited() { return {Kind::Unlimited, 0, 0.0}; }
    static BidCountCap fixed_count(std::size_t n) { return {Kind::Fixed, n, 0.0}; }
    static BidCountCap fair_share(double fraction) { return {Kind::FairShare, 0, fraction}; }

    std::optional<std::size_t> resolve(std::size_t num_sc, std::size_t num_gs) const;
};

std::string to_string(PricingPolicy p);
PricingPolicy parse_pricing(const std::string &name);

// Every knob of one experiment. Powers are linear relative to an arbitrary
// reference; the JSON form expresses them in dB relative to that reference.
struct ScenarioConfig
{
    std::size_t num_gs = 16;
    std::size_t num_sc = 1024;
    double total_bandwidth_hz = 240e6;

    std::size_t num_taps = 8;
    double pdp_decay = 0.0;  // tap l carries power proportional to exp(-pdp_decay * l)
    double noise_power = 1.0;
    std::vector<InterferenceProfile> interference{{300, 400, 100.0}};

    double tx_power_db = 20.0;
    std::vector<double> tx_power_db_grid{0, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30};

    std::vector<double> budgets;  // empty: 100 units each
    std::vector<double> demands;  // empty: unbounded
    PricingPolicy pricing = PricingPolicy::FirstPrice;
    std::size_t max_rounds = 4;
    std::optional<std::size_t> max_sc_per_gs;
    BidCountCap max_bid_count;
    bool rollover = false;

    std::size_t adjacency_radius = 1;
    std::size_t detector_window = 100;
    double detector_threshold = 0.5;

    std::size_t trials = 100;
    std::uint64_t base_seed = 1;
    std::size_t snapshot_trials = 1;
    std::size_t threads = 0;  // 0: hardware concurrency

    double sc_bandwidth_hz() const { return total_bandwidth_hz / static_cast<double>(num_sc); }
    double tx_power_per_sc() const;
    std::vector<double> resolved_budgets() const;
    std::vector<double> resolved_demands() const;

    // Throws ConfigError describing the first violated constraint.
    void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

// Parses the JSON scenario format. Missing keys keep their defaults; unknown
// keys and ill-typed values raise ConfigError.
ScenarioConfig config_from_json(const nlohmann::json &j);
nlohmann::json config_to_json(const ScenarioConfig &config);
ScenarioConfig load_config(const std::filesystem::path &path);

}  // namespace leoauction

#endif  // LEOAUCTION_CONFIG_HPP
