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

#ifndef LEOAUCTION_BASELINES_HPP
#define LEOAUCTION_BASELINES_HPP

#include <cstdint>
#include <vector>

#include "leoauction/channel.hpp"

namespace leoauction {

// Total map from SC to the GS it serves.
struct Allocation
{
    std::vector<GsIndex> winner;
};

// Each SC to a uniformly drawn GS.
Allocation random_allocation(std::size_t num_sc, std::size_t num_gs, std::uint64_t seed);

// Each SC to the GS with the highest capacity on it (lower index on ties).
Allocation capacity_limit_allocation(const CapacityGrid &grid);

// Capacity each GS obtains from an allocation, using its own grid entries.
std::vector<double> per_gs_capacity(const Allocation &allocation, const CapacityGrid &grid);

// Bits per update when every GS reports every SC.
constexpr std::size_t full_feedback_overhead(std::size_t num_sc, std::size_t bits_per_sc = 10)
{
    return num_sc * bits_per_sc;
}

}  // namespace leoauction

#endif  // LEOAUCTION_BASELINES_HPP
