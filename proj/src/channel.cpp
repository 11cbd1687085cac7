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

#include "leoauction/channel.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace leoauction {

std::vector<double> power_delay_profile(std::size_t num_taps, double decay)
{
    if (num_taps == 0)
        throw ConfigError("num_taps must be >= 1");
    std::vector<double> pdp(num_taps);
    for (std::size_t l = 0; l < num_taps; ++l)
        pdp[l] = std::exp(-decay * static_cast<double>(l));
    const double total = std::accumulate(pdp.begin(), pdp.end(), 0.0);
    for (double &p : pdp)
        p /= total;
    return pdp;
}

ChannelRealization generate_channel(const ScenarioConfig &config, std::uint64_t seed)
{
    if (config.num_taps == 0)
        throw ConfigError("num_taps must be >= 1");
    if (config.num_sc == 0)
        throw ConfigError("num_sc must be >= 1");
    if (config.num_gs == 0)
        throw ConfigError("num_gs must be >= 1");

    const std::size_t taps = config.num_taps;
    const std::size_t n_sc = config.num_sc;
    const auto pdp = power_delay_profile(taps, config.pdp_decay);

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      0x6c656fu};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);

    // e^{-j 2 pi m / S}; index (k * l) mod S
    std::vector<std::complex<double>> twiddle(n_sc);
    for (std::size_t m = 0; m < n_sc; ++m) {
        const double phase = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n_sc);
        twiddle[m] = {std::cos(phase), std::sin(phase)};
    }

    ChannelRealization out;
    out.gains = Matrix<std::complex<double>>(config.num_gs, n_sc);
    out.noise_psd = config.noise_power;
    out.interference.assign(n_sc, 0.0);

    std::vector<std::complex<double>> impulse(taps);
    for (GsIndex n = 0; n < config.num_gs; ++n) {
        for (std::size_t l = 0; l < taps; ++l) {
            const double sigma = std::sqrt(pdp[l] / 2.0);
            const double re = normal(rng);
            const double im = normal(rng);
            impulse[l] = {sigma * re, sigma * im};
        }
        auto row = out.gains.row(n);
        for (ScIndex k = 0; k < n_sc; ++k) {
            std::complex<double> h{};
            for (std::size_t l = 0; l < taps; ++l)
                h += impulse[l] * twiddle[(k * l) % n_sc];
            row[k] = h;
        }
    }

    for (const auto &p : config.interference) {
        if (p.start_sc > p.end_sc || p.end_sc >= n_sc)
            throw ConfigError("interference range outside [0, num_sc)");
        for (ScIndex i = p.start_sc; i <= p.end_sc; ++i)
            out.interference[i] += p.power;
    }
    return out;
}

CapacityGrid capacity_grid(const ChannelRealization &realization, std::span<const double> tx_power,
                           double sc_bandwidth)
{
    const std::size_t n_gs = realization.num_gs();
    const std::size_t n_sc = realization.num_sc();
    if (tx_power.size() != n_sc)
        throw std::invalid_argument("tx_power must have one entry per subcarrier");

    CapacityGrid grid;
    grid.capacities = Matrix<double>(n_gs, n_sc);
    grid.snr = Matrix<double>(n_gs, n_sc);
    grid.sc_bandwidth = sc_bandwidth;
    for (GsIndex n = 0; n < n_gs; ++n) {
        for (ScIndex i = 0; i < n_sc; ++i) {
            const double noise = realization.noise_psd + realization.interference[i];
            const double snr = tx_power[i] * std::norm(realization.gains(n, i)) / noise;
            grid.snr(n, i) = snr;
            grid.capacities(n, i) = sc_bandwidth * std::log2(1.0 + snr);
        }
    }
    return grid;
}

CapacityGrid capacity_grid(const ChannelRealization &realization, double tx_power_per_sc,
                           double sc_bandwidth)
{
    if (!(tx_power_per_sc >= 0.0))
        throw std::invalid_argument("tx_power_per_sc must be >= 0");
    const std::vector<double> power(realization.num_sc(), tx_power_per_sc);
    return capacity_grid(realization, power, sc_bandwidth);
}

}  // namespace leoauction
