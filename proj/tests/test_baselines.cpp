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

#include <random>

#include "leoauction/baselines.hpp"
#include "oracles.hpp"

using namespace leoauction;

TEST_CASE("random allocation")
{
    const auto one = random_allocation(50, 1, 3);
    for (GsIndex w : one.winner)
        CHECK(w == 0);

    CHECK(random_allocation(200, 5, 9).winner == random_allocation(200, 5, 9).winner);
    CHECK_FALSE(random_allocation(200, 5, 9).winner == random_allocation(200, 5, 10).winner);

    const std::size_t s = 100000;
    const auto big = random_allocation(s, 16, 1);
    std::vector<std::size_t> count(16, 0);
    for (GsIndex w : big.winner)
        ++count.at(w);
    for (std::size_t c : count)
        CHECK(std::abs(static_cast<double>(c) / s - 1.0 / 16.0) <= 0.01);
}

TEST_CASE("capacity limit picks the per-SC argmax")
{
    const auto grid = oracle::grid_from({{3, 1}, {2, 5}});
    CHECK(capacity_limit_allocation(grid).winner == std::vector<GsIndex>{0, 1});
    const auto caps = per_gs_capacity(capacity_limit_allocation(grid), grid);
    CHECK(caps == std::vector<double>{3.0, 5.0});

    const auto tie = oracle::grid_from({{2, 2}, {2, 2}});
    CHECK(capacity_limit_allocation(tie).winner == std::vector<GsIndex>{0, 0});

    const auto single = oracle::grid_from({{1, 2, 3}});
    CHECK(capacity_limit_allocation(single).winner == std::vector<GsIndex>{0, 0, 0});
}

TEST_CASE("capacity limit matches exhaustive search on 3x4 instances")
{
    std::mt19937_64 rng(31);
    for (int it = 0; it < 200; ++it) {
        const auto grid = oracle::random_grid(rng, 3, 4, 0.2);
        const auto caps = per_gs_capacity(capacity_limit_allocation(grid), grid);
        const double total = caps[0] + caps[1] + caps[2];
        CHECK(total == doctest::Approx(oracle::best_assignment_total(grid.capacities)));
    }
}

TEST_CASE("full feedback overhead")
{
    static_assert(full_feedback_overhead(1024) == 10240);
    CHECK(full_feedback_overhead(512) == 5120);
    CHECK(full_feedback_overhead(0) == 0);
    CHECK(full_feedback_overhead(10, 4) == 40);
}
