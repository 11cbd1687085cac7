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

// leoauction: run auction trials, power sweeps and interference detection.
//
//   leoauction run    --config scenario.json --out results/
//   leoauction sweep  --config scenario.json --out results/
//   leoauction detect --in results/
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "leoauction/harness.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kIoError = 3;

struct Overrides
{
    std::string config_path;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> pricing;
};

leoauction::ScenarioConfig resolve(const Overrides &o)
{
    leoauction::ScenarioConfig c =
        o.config_path.empty() ? leoauction::ScenarioConfig{} : leoauction::load_config(o.config_path);
    if (o.trials)
        c.trials = *o.trials;
    if (o.seed)
        c.base_seed = *o.seed;
    if (o.pricing)
        c.pricing = leoauction::parse_pricing(*o.pricing);
    c.validate();
    return c;
}

void add_overrides(CLI::App *cmd, Overrides &o)
{
    cmd->add_option("--config", o.config_path, "Scenario JSON file (defaults when omitted)");
    cmd->add_option("--trials", o.trials, "Override the number of trials");
    cmd->add_option("--seed", o.seed, "Override the base seed");
    cmd->add_option("--pricing", o.pricing, "Charging rule: first or second")
        ->check(CLI::IsMember({"first", "second"}));
}

std::string ranges(const std::vector<leoauction::ScIndex> &scs)
{
    std::string out;
    for (std::size_t i = 0; i < scs.size();) {
        std::size_t j = i;
        while (j + 1 < scs.size() && scs[j + 1] == scs[j] + 1)
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(scs[i]);
        if (j > i)
            out += '-' + std::to_string(scs[j]);
        i = j + 1;
    }
    return out.empty() ? "none" : out;
}

void print_summary(const leoauction::RunMetrics &m)
{
    const auto &s = m.summary;
    std::printf("trials               %zu\n", m.trials.size());
    std::printf("auction mean / GS    %.6g bit/s\n", s.auction_mean);
    std::printf("random mean / GS     %.6g bit/s\n", s.random_mean);
    std::printf("limit mean / GS      %.6g bit/s\n", s.limit_mean);
    std::printf("auction / random     %.4f\n", s.random_mean > 0 ? s.auction_mean / s.random_mean : 0.0);
    std::printf("fairness wins        %zu / %zu\n", s.fairness_wins, m.trials.size());
    std::printf("uplink overhead      %.1f bit/auction/GS\n", s.overhead_mean_bits);
    std::printf("flagged SCs          %s\n", ranges(m.detection.flagged).c_str());
    if (m.detection.diagnostic)
        std::printf("detector             %s\n", m.detection.diagnostic->c_str());
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Auction-based downlink subcarrier allocation simulator"};
    app.require_subcommand(1);

    Overrides run_opts;
    std::string run_out;
    auto *run = app.add_subcommand("run", "Run Monte Carlo auction trials and export CSVs");
    add_overrides(run, run_opts);
    run->add_option("--out", run_out, "Output directory")->required();

    Overrides sweep_opts;
    std::string sweep_out;
    auto *sweep = app.add_subcommand("sweep", "Trials plus a transmit-power sweep");
    add_overrides(sweep, sweep_opts);
    sweep->add_option("--out", sweep_out, "Output directory")->required();

    std::string detect_in;
    double threshold = 0.5;
    auto *detect = app.add_subcommand("detect", "Flag interfered SCs from an exported deal_price.csv");
    detect->add_option("--in", detect_in, "Directory written by run or sweep")->required();
    detect->add_option("--threshold", threshold, "Fraction of the median deal price");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (*run) {
            const auto config = resolve(run_opts);
            const auto metrics = leoauction::run_trials(config);
            leoauction::export_results(metrics, nullptr, run_out);
            print_summary(metrics);
        }
        else if (*sweep) {
            const auto config = resolve(sweep_opts);
            const auto metrics = leoauction::run_trials(config);
            const auto result = leoauction::power_sweep(config);
            leoauction::export_results(metrics, &result, sweep_out);
            print_summary(metrics);
            for (const auto &p : result.points)
                std::printf("%6.1f dB  auction %.6g  random %.6g  limit %.6g  gap %s\n",
                            p.tx_power_db, p.auction_mean, p.random_mean, p.limit_mean,
                            p.gap_db ? std::to_string(*p.gap_db).c_str() : "-");
            if (result.mean_gap_db)
                std::printf("mean gap             %.3f dB\n", *result.mean_gap_db);
        }
        else if (*detect) {
            const auto prices = leoauction::read_deal_prices(std::filesystem::path(detect_in) / "deal_price.csv");
            const auto result = leoauction::detect_interference(prices, threshold);
            std::printf("%s\n", ranges(result.flagged).c_str());
            if (result.diagnostic)
                std::fprintf(stderr, "%s\n", result.diagnostic->c_str());
        }
    }
    catch (const leoauction::ConfigError &e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfigError;
    }
    catch (const leoauction::IoError &e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kIoError;
    }
    return 0;
}
