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

#include "leoauction/baselines.hpp"

#include <random>
#include <stdexcept>

namespace leoauction {

Allocation random_allocation(std::size_t num_sc, std::size_t num_gs, std::uint64_t seed)
{
    if (num_gs == 0)
        throw std::invalid_argument("random_allocation: num_gs must be >= 1");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      0x72616eu};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<GsIndex> pick(0, num_gs - 1);

    Allocation a;
    a.winner.resize(num_sc);
    for (auto &w : a.winner)
        w = pick(rng);
    return a;
}

Allocation capacity_limit_allocation(const CapacityGrid &grid)
{
    Allocation a;
    a.winner.assign(grid.num_sc(), 0);
    for (ScIndex i = 0; i < grid.num_sc(); ++i) {
        GsIndex best = 0;
        for (GsIndex n = 1; n < grid.num_gs(); ++n)
            if (grid.capacities(n, i) > grid.capacities(best, i))
                best = n;
        a.winner[i] = best;
    }
    return a;
}

std::vector<double> per_gs_capacity(const Allocation &allocation, const CapacityGrid &grid)
{
    if (allocation.winner.size() != grid.num_sc())
        throw std::invalid_argument("per_gs_capacity: allocation and grid sizes differ");
    std::vector<double> caps(grid.num_gs(), 0.0);
    for (ScIndex i = 0; i < allocation.winner.size(); ++i) {
        const GsIndex n = allocation.winner[i];
        if (n >= grid.num_gs())
            throw std::out_of_range("per_gs_capacity: winner outside [0, N)");
        caps[n] += grid.capacities(n, i);
    }
    return caps;
}

}  // namespace leoauction
