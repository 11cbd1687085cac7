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

#include "leoauction/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

namespace leoauction {

using nlohmann::json;

std::string to_string(PricingPolicy p)
{
    return p == PricingPolicy::FirstPrice ? "first" : "second";
}

PricingPolicy parse_pricing(const std::string &name)
{
    if (name == "first")
        return PricingPolicy::FirstPrice;
    if (name == "second")
        return PricingPolicy::SecondPrice;
    throw ConfigError("pricing must be \"first\" or \"second\", got \"" + name + "\"");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

std::optional<std::size_t> BidCountCap::resolve(std::size_t num_sc, std::size_t num_gs) const
{
    switch (kind) {
    case Kind::Unlimited:
        return std::nullopt;
    case Kind::Fixed:
        return fixed;
    case Kind::FairShare:
        break;
    }
    const double share = fraction * static_cast<double>(num_sc) / static_cast<double>(std::max<std::size_t>(1, num_gs));
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(share)));
}

double ScenarioConfig::tx_power_per_sc() const { return db_to_linear(tx_power_db); }

std::vector<double> ScenarioConfig::resolved_budgets() const
{
    if (budgets.empty())
        return std::vector<double>(num_gs, 100.0);
    if (budgets.size() == 1)
        return std::vector<double>(num_gs, budgets.front());
    return budgets;
}

std::vector<double> ScenarioConfig::resolved_demands() const
{
    if (demands.empty())
        return std::vector<double>(num_gs, std::numeric_limits<double>::infinity());
    if (demands.size() == 1)
        return std::vector<double>(num_gs, demands.front());
    return demands;
}

void ScenarioConfig::validate() const
{
    if (num_gs == 0)
        throw ConfigError("num_gs must be >= 1");
    if (num_sc == 0)
        throw ConfigError("num_sc must be >= 1");
    if (num_sc > 1024)
        throw ConfigError("num_sc must be <= 1024 (10-bit start/length bid fields)");
    if (!(total_bandwidth_hz > 0.0) || !std::isfinite(total_bandwidth_hz))
        throw ConfigError("total_bandwidth_hz must be a positive finite number");
    if (num_taps == 0)
        throw ConfigError("num_taps must be >= 1");
    if (!(pdp_decay >= 0.0) || !std::isfinite(pdp_decay))
        throw ConfigError("pdp_decay must be >= 0");
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        throw ConfigError("noise power must be > 0");
    for (const auto &p : interference) {
        if (p.start_sc > p.end_sc || p.end_sc >= num_sc)
            throw ConfigError("interference range [" + std::to_string(p.start_sc) + ", " +
                              std::to_string(p.end_sc) + "] must satisfy start <= end < num_sc");
        if (!(p.power >= 0.0) || !std::isfinite(p.power))
            throw ConfigError("interference power must be >= 0");
    }
    if (!std::isfinite(tx_power_db))
        throw ConfigError("tx_power_db must be finite");
    for (double p : tx_power_db_grid)
        if (!std::isfinite(p))
            throw ConfigError("tx_power_db_grid entries must be finite");
    if (budgets.size() > 1 && budgets.size() != num_gs)
        throw ConfigError("budgets must be a scalar or have num_gs entries");
    for (double b : budgets)
        if (!(b >= 0.0) || !std::isfinite(b))
            throw ConfigError("budgets must be finite and >= 0");
    if (demands.size() > 1 && demands.size() != num_gs)
        throw ConfigError("demands must be a scalar or have num_gs entries");
    for (double d : demands)
        if (!(d >= 0.0))
            throw ConfigError("demands must be >= 0");
    if (max_rounds == 0)
        throw ConfigError("max_rounds must be >= 1");
    if (max_bid_count.kind == BidCountCap::Kind::Fixed && max_bid_count.fixed == 0)
        throw ConfigError("max_bid_count must be >= 1 when set");
    if (max_bid_count.kind == BidCountCap::Kind::FairShare &&
        (!(max_bid_count.fraction > 0.0) || !std::isfinite(max_bid_count.fraction)))
        throw ConfigError("max_bid_count.fair_share must be > 0");
    if (detector_window == 0)
        throw ConfigError("detector_window must be >= 1");
    if (!(detector_threshold >= 0.0) || !std::isfinite(detector_threshold))
        throw ConfigError("detector_threshold must be >= 0");
    if (trials == 0)
        throw ConfigError("trials must be >= 1");
}

namespace {

template <typename T>
T get_as(const json &j, const char *key)
{
    try {
        return j.get<T>();
    }
    catch (const json::exception &e) {
        throw ConfigError(std::string("config key \"") + key + "\": " + e.what());
    }
}

std::size_t get_count(const json &j, const char *key)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ConfigError(std::string("config key \"") + key + "\" must be a non-negative integer");
    return j.get<std::size_t>();
}

double get_number(const json &j, const char *key)
{
    if (!j.is_number())
        throw ConfigError(std::string("config key \"") + key + "\" must be a number");
    return j.get<double>();
}

std::vector<double> get_number_list(const json &j, const char *key, bool allow_null)
{
    std::vector<double> out;
    if (j.is_null() && allow_null)
        return out;
    if (j.is_number()) {
        out.push_back(j.get<double>());
        return out;
    }
    if (!j.is_array())
        throw ConfigError(std::string("config key \"") + key + "\" must be a number or an array");
    for (const auto &v : j) {
        if (v.is_null() && allow_null)
            out.push_back(std::numeric_limits<double>::infinity());
        else
            out.push_back(get_number(v, key));
    }
    return out;
}

std::optional<std::size_t> get_optional_count(const json &j, const char *key)
{
    if (j.is_null())
        return std::nullopt;
    return get_count(j, key);
}

}  // namespace

ScenarioConfig config_from_json(const json &j)
{
    if (!j.is_object())
        throw ConfigError("config root must be a JSON object");

    ScenarioConfig c;
    for (const auto &[key, v] : j.items()) {
        if (key == "num_gs")
            c.num_gs = get_count(v, "num_gs");
        else if (key == "num_sc")
            c.num_sc = get_count(v, "num_sc");
        else if (key == "total_bandwidth_hz")
            c.total_bandwidth_hz = get_number(v, "total_bandwidth_hz");
        else if (key == "num_taps")
            c.num_taps = get_count(v, "num_taps");
        else if (key == "pdp_decay")
            c.pdp_decay = get_number(v, "pdp_decay");
        else if (key == "noise_power_db")
            c.noise_power = db_to_linear(get_number(v, "noise_power_db"));
        else if (key == "interference") {
            if (!v.is_array())
                throw ConfigError("config key \"interference\" must be an array");
            c.interference.clear();
            for (const auto &p : v) {
                if (!p.is_object())
                    throw ConfigError("interference entries must be objects");
                InterferenceProfile prof;
                for (const auto &[pk, pv] : p.items()) {
                    if (pk == "start_sc")
                        prof.start_sc = get_count(pv, "interference.start_sc");
                    else if (pk == "end_sc")
                        prof.end_sc = get_count(pv, "interference.end_sc");
                    else if (pk == "power_db")
                        prof.power = pv.is_null() ? 0.0 : db_to_linear(get_number(pv, "interference.power_db"));
                    else
                        throw ConfigError("unknown interference key \"" + pk + "\"");
                }
                c.interference.push_back(prof);
            }
        }
        else if (key == "tx_power_db")
            c.tx_power_db = get_number(v, "tx_power_db");
        else if (key == "tx_power_db_grid")
            c.tx_power_db_grid = get_number_list(v, "tx_power_db_grid", false);
        else if (key == "budgets")
            c.budgets = get_number_list(v, "budgets", false);
        else if (key == "demands")
            c.demands = get_number_list(v, "demands", true);
        else if (key == "pricing")
            c.pricing = parse_pricing(get_as<std::string>(v, "pricing"));
        else if (key == "max_rounds")
            c.max_rounds = get_count(v, "max_rounds");
        else if (key == "max_sc_per_gs")
            c.max_sc_per_gs = get_optional_count(v, "max_sc_per_gs");
        else if (key == "max_bid_count") {
            if (v.is_null())
                c.max_bid_count = BidCountCap::unlimited();
            else if (v.is_object()) {
                if (v.size() != 1 || !v.contains("fair_share"))
                    throw ConfigError("max_bid_count object must be {\"fair_share\": <fraction>}");
                c.max_bid_count = BidCountCap::fair_share(get_number(v["fair_share"], "max_bid_count.fair_share"));
            }
            else
                c.max_bid_count = BidCountCap::fixed_count(get_count(v, "max_bid_count"));
        }
        else if (key == "rollover")
            c.rollover = get_as<bool>(v, "rollover");
        else if (key == "adjacency_radius")
            c.adjacency_radius = get_count(v, "adjacency_radius");
        else if (key == "detector_window")
            c.detector_window = get_count(v, "detector_window");
        else if (key == "detector_threshold")
            c.detector_threshold = get_number(v, "detector_threshold");
        else if (key == "trials")
            c.trials = get_count(v, "trials");
        else if (key == "base_seed")
            c.base_seed = get_count(v, "base_seed");
        else if (key == "snapshot_trials")
            c.snapshot_trials = get_count(v, "snapshot_trials");
        else if (key == "threads")
            c.threads = get_count(v, "threads");
        else
            throw ConfigError("unknown config key \"" + key + "\"");
    }
    c.validate();
    return c;
}

json config_to_json(const ScenarioConfig &c)
{
    json interference = json::array();
    for (const auto &p : c.interference)
        interference.push_back(
            {{"start_sc", p.start_sc}, {"end_sc", p.end_sc}, {"power_db", p.power > 0.0 ? json(linear_to_db(p.power)) : json(nullptr)}});

    auto demand = [](double d) { return std::isinf(d) ? json(nullptr) : json(d); };
    json demands = nullptr;
    if (c.demands.size() == 1)
        demands = demand(c.demands.front());
    else if (!c.demands.empty()) {
        demands = json::array();
        for (double d : c.demands)
            demands.push_back(demand(d));
    }
    json budgets = c.budgets.empty() ? json(100.0)
                   : c.budgets.size() == 1 ? json(c.budgets.front())
                                           : json(c.budgets);

    auto optional_count = [](const std::optional<std::size_t> &v) {
        return v ? json(*v) : json(nullptr);
    };
    json bid_cap = nullptr;
    if (c.max_bid_count.kind == BidCountCap::Kind::Fixed)
        bid_cap = c.max_bid_count.fixed;
    else if (c.max_bid_count.kind == BidCountCap::Kind::FairShare)
        bid_cap = {{"fair_share", c.max_bid_count.fraction}};

    return {
        {"num_gs", c.num_gs},
        {"num_sc", c.num_sc},
        {"total_bandwidth_hz", c.total_bandwidth_hz},
        {"num_taps", c.num_taps},
        {"pdp_decay", c.pdp_decay},
        {"noise_power_db", linear_to_db(c.noise_power)},
        {"interference", interference},
        {"tx_power_db", c.tx_power_db},
        {"tx_power_db_grid", c.tx_power_db_grid},
        {"budgets", budgets},
        {"demands", demands},
        {"pricing", to_string(c.pricing)},
        {"max_rounds", c.max_rounds},
        {"max_sc_per_gs", optional_count(c.max_sc_per_gs)},
        {"max_bid_count", bid_cap},
        {"rollover", c.rollover},
        {"adjacency_radius", c.adjacency_radius},
        {"detector_window", c.detector_window},
        {"detector_threshold", c.detector_threshold},
        {"trials", c.trials},
        {"base_seed", c.base_seed},
        {"snapshot_trials", c.snapshot_trials},
        {"threads", c.threads},
    };
}

ScenarioConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file " + path.string());
    json j;
    try {
        in >> j;
    }
    catch (const json::parse_error &e) {
        throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

}  // namespace leoauction
