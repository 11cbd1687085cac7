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

#ifndef LEOAUCTION_CHANNEL_HPP
#define LEOAUCTION_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "leoauction/common.hpp"
#include "leoauction/config.hpp"

namespace leoauction {

// One downlink channel snapshot: complex gain per (GS, SC), a scalar noise
// power per SC and the interference power added on each SC.
struct ChannelRealization
{
    Matrix<std::complex<double>> gains;
    double noise_psd = 1.0;
    std::vector<double> interference;

    std::size_t num_gs() const { return gains.rows(); }
    std::size_t num_sc() const { return gains.cols(); }
};

struct CapacityGrid
{
    Matrix<double> capacities;  // bit/s
    Matrix<double> snr;         // linear
    double sc_bandwidth = 1.0;  // Hz

    std::size_t num_gs() const { return capacities.rows(); }
    std::size_t num_sc() const { return capacities.cols(); }
};

// Normalized exponential power-delay profile of length num_taps.
std::vector<double> power_delay_profile(std::size_t num_taps, double decay);

// L-tap circular tapped-delay line per GS with i.i.d. CN(0, p_l) taps,
// mapped to the S subcarriers by an S-point DFT. Deterministic for fixed
// (config, seed).
ChannelRealization generate_channel(const ScenarioConfig &config, std::uint64_t seed);

// Uniform transmit power on every SC.
CapacityGrid capacity_grid(const ChannelRealization &realization, double tx_power_per_sc,
                           double sc_bandwidth);

// Per-SC transmit power, e.g. after power reloading.
CapacityGrid capacity_grid(const ChannelRealization &realization,
                           std::span<const double> tx_power, double sc_bandwidth);

}  // namespace leoauction

#endif  // LEOAUCTION_CHANNEL_HPP
