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

#include "leoauction/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace leoauction {

double mean_of(std::span<const double> values)
{
    if (values.empty())
        return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double population_stddev(std::span<const double> values)
{
    if (values.empty())
        return 0.0;
    const double m = mean_of(values);
    double acc = 0.0;
    for (double v : values)
        acc += (v - m) * (v - m);
    return std::sqrt(acc / static_cast<double>(values.size()));
}

std::uint64_t grid_hash(const CapacityGrid &grid)
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void *p, std::size_t n) {
        const auto *bytes = static_cast<const unsigned char *>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ull;
        }
    };
    const std::size_t dims[2] = {grid.num_gs(), grid.num_sc()};
    mix(dims, sizeof dims);
    for (double c : grid.capacities.data())
        mix(&c, sizeof c);
    return h;
}

namespace {

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &body)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    body(i);
                }
                catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

struct AuctionRun
{
    AuctionOutcome outcome;
    std::vector<Flag> sold;
    std::vector<Flag> free;
};

AuctionRun auction_with_aftermarket(const ScenarioConfig &config, const CapacityGrid &grid)
{
    AuctionRun run;
    Ledger ledger = Ledger::with_budgets(config.resolved_budgets(), config.rollover);
    run.outcome = run_auction(grid, ledger, AuctionPolicy::from_config(config));

    const std::size_t n_sc = grid.num_sc();
    run.sold.assign(n_sc, 0);
    for (ScIndex sc = 0; sc < n_sc; ++sc)
        run.sold[sc] = run.outcome.allocation.sold(sc) ? 1 : 0;

    const auto unsold = unsold_subcarriers(run.outcome.allocation);
    const auto extra = assign_unsold(unsold, run.outcome.bid_records, config.adjacency_radius);
    apply_free_assignments(run.outcome, extra, grid);
    run.free.assign(n_sc, 0);
    for (const auto &a : extra)
        run.free[a.sc] = 1;
    return run;
}

}  // namespace

TrialMetrics run_trial(const ScenarioConfig &config, std::size_t trial)
{
    TrialMetrics m;
    m.trial = trial;
    m.seed = config.base_seed + trial;

    const auto channel = generate_channel(config, m.seed);
    const auto grid = capacity_grid(channel, config.tx_power_per_sc(), config.sc_bandwidth_hz());
    m.grid_hash = grid_hash(grid);

    auto run = auction_with_aftermarket(config, grid);
    m.auction_capacity = run.outcome.per_gs_won_capacity;
    m.message_counts = run.outcome.message_counts;
    m.overhead_bits = run.outcome.overhead_bits;
    m.rounds = run.outcome.rounds_executed;
    m.allocation = std::move(run.outcome.allocation);
    m.sold = std::move(run.sold);
    m.free = std::move(run.free);

    m.random_capacity =
        per_gs_capacity(random_allocation(config.num_sc, config.num_gs, m.seed), grid);
    m.limit_capacity = per_gs_capacity(capacity_limit_allocation(grid), grid);
    m.reloaded_auction_total =
        std::accumulate(m.auction_capacity.begin(), m.auction_capacity.end(), 0.0);
    return m;
}

RunMetrics run_trials(const ScenarioConfig &config)
{
    config.validate();
    RunMetrics r;
    r.config = config;
    r.trials.resize(config.trials);
    parallel_for(config.trials, config.threads,
                 [&](std::size_t t) { r.trials[t] = run_trial(config, t); });

    const std::size_t n_sc = config.num_sc;
    const std::size_t window = std::min(config.detector_window, config.trials);
    DealPriceHistory history(n_sc, window);
    r.sold_counts.assign(n_sc, 0);
    r.free_counts.assign(n_sc, 0);
    for (const auto &t : r.trials) {
        history.record(t.allocation.deal_price, t.sold);
        for (ScIndex sc = 0; sc < n_sc; ++sc) {
            r.sold_counts[sc] += t.sold[sc];
            r.free_counts[sc] += t.free[sc];
        }
    }
    r.average_deal_price = history.average_prices();
    r.detection = detect_interference(history, config.detector_threshold);
    r.unsold_detection = detect_by_unsold(history);

    // Re-run every auction with the flagged SCs' power moved elsewhere.
    if (!r.detection.flagged.empty()) {
        const std::vector<double> uniform(n_sc, config.tx_power_per_sc());
        const auto reloaded = reload_power(uniform, r.detection.flagged);
        parallel_for(config.trials, config.threads, [&](std::size_t t) {
            const auto channel = generate_channel(config, r.trials[t].seed);
            const auto grid = capacity_grid(channel, reloaded.power, config.sc_bandwidth_hz());
            const auto run = auction_with_aftermarket(config, grid);
            const auto &won = run.outcome.per_gs_won_capacity;
            r.trials[t].reloaded_auction_total = std::accumulate(won.begin(), won.end(), 0.0);
        });
    }

    auto &s = r.summary;
    double overhead = 0.0;
    double unsold = 0.0;
    for (const auto &t : r.trials) {
        s.auction_mean += mean_of(t.auction_capacity);
        s.random_mean += mean_of(t.random_capacity);
        s.limit_mean += mean_of(t.limit_capacity);
        if (population_stddev(t.auction_capacity) < population_stddev(t.limit_capacity))
            ++s.fairness_wins;
        const double auction_total =
            std::accumulate(t.auction_capacity.begin(), t.auction_capacity.end(), 0.0);
        const double limit_total =
            std::accumulate(t.limit_capacity.begin(), t.limit_capacity.end(), 0.0);
        if (auction_total > limit_total * (1.0 + 1e-12))
            ++s.dominance_violations;
        s.auction_total_mean += auction_total;
        s.reloaded_total_mean += t.reloaded_auction_total;
        for (std::size_t bits : t.overhead_bits)
            overhead += static_cast<double>(bits);
        unsold += static_cast<double>(std::count(t.allocation.winner.begin(),
                                                 t.allocation.winner.end(), std::nullopt));
    }
    const auto trials = static_cast<double>(r.trials.size());
    s.auction_mean /= trials;
    s.random_mean /= trials;
    s.limit_mean /= trials;
    s.auction_total_mean /= trials;
    s.reloaded_total_mean /= trials;
    s.overhead_mean_bits = overhead / (trials * static_cast<double>(config.num_gs));
    s.mean_unsold_after_aftermarket = unsold / trials;
    return r;
}

std::optional<double> interpolate_power_db(std::span<const double> powers_db,
                                           std::span<const double> values, double target)
{
    if (powers_db.size() != values.size() || values.size() < 2)
        return std::nullopt;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const double lo = values[k];
        const double hi = values[k + 1];
        if (target >= lo && target <= hi && hi > lo) {
            const double frac = (target - lo) / (hi - lo);
            return powers_db[k] + frac * (powers_db[k + 1] - powers_db[k]);
        }
    }
    return std::nullopt;
}

std::vector<std::optional<double>> horizontal_gaps_db(std::span<const double> powers_db,
                                                      std::span<const double> upper,
                                                      std::span<const double> lower)
{
    std::vector<std::optional<double>> gaps(upper.size());
    for (std::size_t k = 0; k < upper.size(); ++k) {
        const auto p = interpolate_power_db(powers_db, lower, upper[k]);
        if (p)
            gaps[k] = *p - powers_db[k];
    }
    return gaps;
}

SweepResult power_sweep(const ScenarioConfig &config)
{
    config.validate();
    if (config.tx_power_db_grid.empty())
        throw ConfigError("tx_power_db_grid must be nonempty for a sweep");

    SweepResult out;
    std::vector<double> powers = config.tx_power_db_grid;
    std::sort(powers.begin(), powers.end());

    for (double p : powers) {
        ScenarioConfig c = config;
        c.tx_power_db = p;
        std::vector<TrialMetrics> trials(c.trials);
        parallel_for(c.trials, c.threads, [&](std::size_t t) { trials[t] = run_trial(c, t); });
        SweepPoint pt;
        pt.tx_power_db = p;
        for (const auto &t : trials) {
            pt.auction_mean += mean_of(t.auction_capacity);
            pt.random_mean += mean_of(t.random_capacity);
            pt.limit_mean += mean_of(t.limit_capacity);
        }
        const auto n = static_cast<double>(trials.size());
        pt.auction_mean /= n;
        pt.random_mean /= n;
        pt.limit_mean /= n;
        out.points.push_back(pt);
    }

    std::vector<double> auction, random;
    for (const auto &pt : out.points) {
        auction.push_back(pt.auction_mean);
        random.push_back(pt.random_mean);
    }
    const auto gaps = horizontal_gaps_db(powers, auction, random);
    double sum = 0.0;
    std::size_t valid = 0;
    for (std::size_t k = 0; k < gaps.size(); ++k) {
        out.points[k].gap_db = gaps[k];
        if (gaps[k]) {
            sum += *gaps[k];
            ++valid;
        }
    }
    if (valid > 0)
        out.mean_gap_db = sum / static_cast<double>(valid);
    return out;
}

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

class CsvFile
{
public:
    CsvFile(const std::filesystem::path &path, const std::string &header) : path_(path), out_(path)
    {
        if (!out_)
            throw IoError("cannot open " + path.string() + " for writing");
        out_ << header << '\n';
    }

    std::ostream &row() { return out_; }

    void close()
    {
        out_.close();
        if (!out_)
            throw IoError("failed writing " + path_.string());
    }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace

void export_results(const RunMetrics &metrics, const SweepResult *sweep,
                    const std::filesystem::path &out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

    {
        CsvFile f(out_dir / "capacity_per_gs.csv", "trial,gs,auction_bps,random_bps,limit_bps");
        for (const auto &t : metrics.trials)
            for (GsIndex n = 0; n < t.auction_capacity.size(); ++n)
                f.row() << t.trial << ',' << n << ',' << num(t.auction_capacity[n]) << ','
                        << num(t.random_capacity[n]) << ',' << num(t.limit_capacity[n]) << '\n';
        f.close();
    }
    {
        CsvFile f(out_dir / "fairness.csv",
                  "trial,auction_mean_bps,auction_std_bps,random_mean_bps,random_std_bps,"
                  "limit_mean_bps,limit_std_bps");
        for (const auto &t : metrics.trials)
            f.row() << t.trial << ',' << num(mean_of(t.auction_capacity)) << ','
                    << num(population_stddev(t.auction_capacity)) << ','
                    << num(mean_of(t.random_capacity)) << ','
                    << num(population_stddev(t.random_capacity)) << ','
                    << num(mean_of(t.limit_capacity)) << ','
                    << num(population_stddev(t.limit_capacity)) << '\n';
        f.close();
    }
    {
        CsvFile f(out_dir / "power_sweep.csv",
                  "tx_power_db,auction_mean_bps,random_mean_bps,limit_mean_bps,gap_db");
        if (sweep)
            for (const auto &p : sweep->points)
                f.row() << num(p.tx_power_db) << ',' << num(p.auction_mean) << ','
                        << num(p.random_mean) << ',' << num(p.limit_mean) << ','
                        << (p.gap_db ? num(*p.gap_db) : std::string{}) << '\n';
        f.close();
    }
    {
        CsvFile f(out_dir / "overhead.csv", "trial,gs,messages,bits");
        for (const auto &t : metrics.trials)
            for (GsIndex n = 0; n < t.message_counts.size(); ++n)
                f.row() << t.trial << ',' << n << ',' << t.message_counts[n] << ','
                        << t.overhead_bits[n] << '\n';
        f.close();
    }
    {
        CsvFile f(out_dir / "deal_price.csv", "sc,mean_deal_price,sold_count,free_count,flagged");
        std::vector<Flag> flagged(metrics.average_deal_price.size(), 0);
        for (ScIndex sc : metrics.detection.flagged)
            if (sc < flagged.size())
                flagged[sc] = 1;
        if (!metrics.trials.empty())
            for (ScIndex sc = 0; sc < metrics.average_deal_price.size(); ++sc)
                f.row() << sc << ',' << num(metrics.average_deal_price[sc]) << ','
                        << metrics.sold_counts[sc] << ',' << metrics.free_counts[sc] << ','
                        << int{flagged[sc]} << '\n';
        f.close();
    }
    {
        CsvFile f(out_dir / "allocation_map.csv", "trial,sc,winner,deal_price,round,free");
        const std::size_t snaps = std::min(metrics.config.snapshot_trials, metrics.trials.size());
        for (std::size_t k = 0; k < snaps; ++k) {
            const auto &t = metrics.trials[k];
            for (ScIndex sc = 0; sc < t.allocation.size(); ++sc) {
                f.row() << t.trial << ',' << sc << ',';
                if (t.allocation.winner[sc])
                    f.row() << *t.allocation.winner[sc];
                f.row() << ',' << num(t.allocation.deal_price[sc]) << ',';
                if (t.allocation.winning_round[sc])
                    f.row() << *t.allocation.winning_round[sc];
                f.row() << ',' << int{t.free[sc]} << '\n';
            }
        }
        f.close();
    }
    {
        nlohmann::json j;
        j["config"] = config_to_json(metrics.config);
        nlohmann::json seeds = nlohmann::json::array();
        for (const auto &t : metrics.trials)
            seeds.push_back(t.seed);
        j["trial_seeds"] = seeds;
        const auto &s = metrics.summary;
        j["summary"] = {
            {"auction_mean_bps", s.auction_mean},
            {"random_mean_bps", s.random_mean},
            {"limit_mean_bps", s.limit_mean},
            {"auction_over_random", s.random_mean > 0 ? s.auction_mean / s.random_mean : 0.0},
            {"overhead_mean_bits", s.overhead_mean_bits},
            {"fairness_wins", s.fairness_wins},
            {"dominance_violations", s.dominance_violations},
            {"mean_unsold_after_aftermarket", s.mean_unsold_after_aftermarket},
            {"auction_total_mean_bps", s.auction_total_mean},
            {"reloaded_total_mean_bps", s.reloaded_total_mean},
            {"flagged_count", metrics.detection.flagged.size()},
        };
        if (metrics.detection.diagnostic)
            j["summary"]["detector_diagnostic"] = *metrics.detection.diagnostic;
        if (sweep && sweep->mean_gap_db)
            j["summary"]["mean_gap_db"] = *sweep->mean_gap_db;

        const auto path = out_dir / "run.json";
        std::ofstream out(path);
        if (!out)
            throw IoError("cannot open " + path.string() + " for writing");
        out << j.dump(2) << '\n';
        out.close();
        if (!out)
            throw IoError("failed writing " + path.string());
    }
}

std::vector<double> read_deal_prices(const std::filesystem::path &csv)
{
    std::ifstream in(csv);
    if (!in)
        throw IoError("cannot open " + csv.string());
    std::string line;
    if (!std::getline(in, line))
        throw IoError(csv.string() + " is empty");

    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            header.push_back(cell);
    }
    const auto col = std::find(header.begin(), header.end(), "mean_deal_price");
    if (col == header.end())
        throw IoError(csv.string() + " has no mean_deal_price column");
    const auto index = static_cast<std::size_t>(col - header.begin());

    std::vector<double> prices;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string cell;
        for (std::size_t k = 0; k <= index; ++k)
            if (!std::getline(ss, cell, ','))
                throw IoError(csv.string() + ": short row \"" + line + "\"");
        try {
            prices.push_back(std::stod(cell));
        }
        catch (const std::exception &) {
            throw IoError(csv.string() + ": bad number \"" + cell + "\"");
        }
    }
    return prices;
}

}  // namespace leoauction
