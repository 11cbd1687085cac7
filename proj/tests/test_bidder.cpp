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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "leoauction/bidder.hpp"
#include "oracles.hpp"

using namespace leoauction;

TEST_CASE("estimate_capacities masks unavailable SCs")
{
    const std::vector<double> row{3, 5, 2};
    const std::vector<Flag> all{1, 1, 1};
    const std::vector<Flag> none{0, 0, 0};
    const std::vector<Flag> some{1, 0, 1};
    CHECK(estimate_capacities(row, all) == row);
    CHECK(estimate_capacities(row, none) == std::vector<double>{0, 0, 0});
    CHECK(estimate_capacities(row, some) == std::vector<double>{3, 0, 2});
    const std::vector<Flag> short_mask{1, 1};
    CHECK_THROWS(estimate_capacities(row, short_mask));
}

TEST_CASE("sort_by_capacity is stable and descending")
{
    const std::vector<double> caps{1, 4, 4, 2};
    CHECK(sort_by_capacity(caps) == std::vector<ScIndex>{1, 2, 3, 0});
}

TEST_CASE("select_bid_count worked examples")
{
    CHECK(select_bid_count(std::vector<double>{4, 3, 2, 1}) == 3);
    CHECK(select_bid_count(std::vector<double>{5, 5, 5, 5}) == 4);
    CHECK(select_bid_count(std::vector<double>{7, 0, 0, 0}) == 1);
    CHECK(select_bid_count(std::vector<double>{9}) == 1);
    CHECK(select_bid_count(std::vector<double>{0}) == 0);
    CHECK(select_bid_count(std::vector<double>{}) == 0);
    CHECK(select_bid_count(std::vector<double>{0, 0, 0}) == 0);
    CHECK(select_bid_count(std::vector<double>{5, 5, 5, 5}, 2) == 2);
}

TEST_CASE("select_bid_count agrees with the brute-force objective")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_int_distribution<int> small(0, 6);
    std::exponential_distribution<double> expo(0.3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int it = 0; it < 3000; ++it) {
        std::vector<double> v(static_cast<std::size_t>(len(rng)));
        const int k = kind(rng);
        for (auto &x : v)
            x = k == 0 ? small(rng) : (k == 1 ? expo(rng) : std::log2(1.0 + 50.0 * expo(rng)));
        std::sort(v.begin(), v.end(), std::greater<>());
        std::optional<std::size_t> cap;
        if (it % 3 == 0)
            cap = static_cast<std::size_t>(1 + it % 7);
        INFO("iteration " << it);
        CHECK(select_bid_count(v, cap) == oracle::bid_count(v, cap));
    }
}

TEST_CASE("form_groups splits selections into maximal runs")
{
    const std::vector<double> caps{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const auto g = form_groups({8, 2, 3, 1, 7}, caps);
    REQUIRE(g.size() == 2);
    CHECK(g[0].start_sc == 1);
    CHECK(g[0].length == 3);
    CHECK(g[0].member_capacities == std::vector<double>{2, 3, 4});
    CHECK(g[1].start_sc == 7);
    CHECK(g[1].length == 2);
    CHECK(g[1].end_sc() == 9);

    CHECK(form_groups({}, caps).empty());
    const auto single = form_groups({4}, caps);
    REQUIRE(single.size() == 1);
    CHECK(single[0].start_sc == 4);
    CHECK(single[0].length == 1);
}

TEST_CASE("assign_ratios normalises group capacities")
{
    std::vector<BidGroup> one{{0, 2, {1, 1}}};
    CHECK(assign_ratios(one) == std::vector<double>{1.0});

    std::vector<BidGroup> two{{0, 2, {5, 3}}, {5, 1, {2}}};
    const auto r = assign_ratios(two);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(0.8));
    CHECK(r[1] == doctest::Approx(0.2));

    for (auto &g : two)
        for (auto &c : g.member_capacities)
            c *= 7.0;
    const auto scaled = assign_ratios(two);
    CHECK(scaled[0] == doctest::Approx(r[0]).epsilon(1e-15));
    CHECK(scaled[1] == doctest::Approx(r[1]).epsilon(1e-15));

    std::vector<BidGroup> dead{{0, 1, {0}}};
    CHECK(assign_ratios(dead).empty());
}

TEST_CASE("build_bids composes the bidder pipeline")
{
    const std::vector<double> flat{2, 2, 2, 2};
    const std::vector<double> snr{3, 3, 3, 3};
    const std::vector<Flag> all{1, 1, 1, 1};
    const std::vector<Flag> none{0, 0, 0, 0};

    CHECK(build_bids(flat, snr, none).empty());

    const auto b = build_bids(flat, snr, all);
    REQUIRE(b.size() == 1);
    CHECK(b[0].start_sc == 0);
    CHECK(b[0].length == 4);
    CHECK(b[0].ratio == doctest::Approx(1.0));
    CHECK(b[0].min_snr_db == doctest::Approx(10.0 * std::log10(3.0)));

    // [4,3,2,1] selects the top three, SCs 0-2, with min SNR at SC 2.
    const std::vector<double> caps{4, 3, 2, 1};
    const std::vector<double> snr2{15, 7, 3, 1};
    const auto m = build_bids(caps, snr2, all);
    REQUIRE(m.size() == 1);
    CHECK(m[0].start_sc == 0);
    CHECK(m[0].length == 3);
    CHECK(m[0].min_snr_db == doctest::Approx(10.0 * std::log10(3.0)));

    // Two separated peaks become two groups with proportional ratios.
    const std::vector<double> peaks{9, 1, 1, 1, 1, 1, 1, 6};
    const std::vector<double> psnr(8, 1.0);
    const std::vector<Flag> avail(8, 1);
    const auto p = build_bids(peaks, psnr, avail);
    REQUIRE(p.size() == 2);
    CHECK(p[0].start_sc == 0);
    CHECK(p[1].start_sc == 7);
    CHECK(p[0].ratio == doctest::Approx(0.6));
    CHECK(p[1].ratio == doctest::Approx(0.4));
    CHECK(build_bids(peaks, psnr, avail, 1).size() == 1);
}

TEST_CASE("bidder decisions are invariant to capacity scaling")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> scale(0.01, 1000.0);
    for (int it = 0; it < 500; ++it) {
        const auto grid = oracle::random_grid(rng, 1, 64, 0.1);
        const auto row = grid.capacities.row(0);
        const auto snr = grid.snr.row(0);
        std::vector<Flag> avail(64, 1);
        for (std::size_t i = 0; i < 64; i += 5)
            avail[i] = static_cast<Flag>(it % 2);

        const double k = it % 2 ? std::exp2(static_cast<double>(it % 20) - 10.0) : scale(rng);
        std::vector<double> scaled(row.begin(), row.end());
        for (auto &c : scaled)
            c *= k;

        const auto a = build_bids(row, snr, avail);
        const auto b = build_bids(scaled, snr, avail);
        REQUIRE(a.size() == b.size());
        for (std::size_t g = 0; g < a.size(); ++g) {
            CHECK(a[g].start_sc == b[g].start_sc);
            CHECK(a[g].length == b[g].length);
            CHECK(a[g].ratio == doctest::Approx(b[g].ratio).epsilon(1e-12));
            CHECK(a[g].min_snr_db == b[g].min_snr_db);
        }
    }
}
