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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "leoauction/channel.hpp"

using namespace leoauction;

namespace {

ScenarioConfig small(std::size_t gs, std::size_t sc, std::size_t taps)
{
    ScenarioConfig c;
    c.num_gs = gs;
    c.num_sc = sc;
    c.num_taps = taps;
    c.interference.clear();
    return c;
}

}  // namespace

TEST_CASE("power delay profile is normalised")
{
    const auto flat = power_delay_profile(4, 0.0);
    REQUIRE(flat.size() == 4);
    for (double p : flat)
        CHECK(p == doctest::Approx(0.25));

    const auto decaying = power_delay_profile(3, 1.0);
    const double z = 1.0 + std::exp(-1.0) + std::exp(-2.0);
    CHECK(decaying[0] == doctest::Approx(1.0 / z));
    CHECK(decaying[2] == doctest::Approx(std::exp(-2.0) / z));
}

TEST_CASE("single tap gives a flat channel")
{
    const auto ch = generate_channel(small(3, 64, 1), 7);
    for (GsIndex n = 0; n < 3; ++n)
        for (ScIndex i = 1; i < 64; ++i)
            CHECK(std::abs(ch.gains(n, i)) == doctest::Approx(std::abs(ch.gains(n, 0))).epsilon(1e-9));
}

TEST_CASE("channel is deterministic per seed")
{
    const auto c = small(4, 128, 8);
    CHECK(generate_channel(c, 42).gains == generate_channel(c, 42).gains);
    CHECK_FALSE(generate_channel(c, 42).gains == generate_channel(c, 43).gains);
}

TEST_CASE("frequency response matches a direct DFT of the taps")
{
    // With 2 taps h0, h1: H(i) = h0 + h1 e^{-j 2 pi i / S}. Recover the taps
    // from H(0) and H(S/4) and check every other SC against the formula.
    const std::size_t s = 16;
    const auto ch = generate_channel(small(1, s, 2), 11);
    const std::complex<double> h0_plus_h1 = ch.gains(0, 0);
    const std::complex<double> h0_minus_jh1 = ch.gains(0, s / 4);
    const std::complex<double> j(0.0, 1.0);
    const std::complex<double> h1 = (h0_plus_h1 - h0_minus_jh1) / (1.0 + j);
    const std::complex<double> h0 = h0_plus_h1 - h1;
    for (ScIndex i = 0; i < s; ++i) {
        const double w = -2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(s);
        const auto expect = h0 + h1 * std::polar(1.0, w);
        CHECK(std::abs(ch.gains(0, i) - expect) < 1e-9);
    }
}

TEST_CASE("mean channel power is unity over many seeds")
{
    const auto c = small(1, 1024, 8);
    double total = 0.0;
    const int seeds = 10000;
    for (int s = 0; s < seeds; ++s) {
        const auto ch = generate_channel(c, static_cast<std::uint64_t>(s));
        double m = 0.0;
        for (ScIndex i = 0; i < 1024; ++i)
            m += std::norm(ch.gains(0, i));
        total += m / 1024.0;
    }
    const double mean = total / seeds;
    CHECK(mean >= 0.95);
    CHECK(mean <= 1.05);
}

TEST_CASE("rows for different GSs are uncorrelated")
{
    const auto c = small(2, 64, 8);
    const int trials = 2000;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    std::size_t count = 0;
    for (int t = 0; t < trials; ++t) {
        const auto ch = generate_channel(c, static_cast<std::uint64_t>(t) + 1);
        for (ScIndex i = 0; i < 64; i += 8) {
            const double x = std::norm(ch.gains(0, i));
            const double y = std::norm(ch.gains(1, i));
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
            ++count;
        }
    }
    const double n = static_cast<double>(count);
    const double cov = sxy / n - (sx / n) * (sy / n);
    const double rho = cov / std::sqrt((sxx / n - sx * sx / n / n) * (syy / n - sy * sy / n / n));
    CHECK(std::abs(rho) < 0.05);
}

TEST_CASE("interference is confined to its band")
{
    ScenarioConfig c = small(1, 32, 4);
    c.interference = {{4, 7, 50.0}, {6, 9, 10.0}};
    const auto ch = generate_channel(c, 3);
    CHECK(ch.interference[3] == 0.0);
    CHECK(ch.interference[4] == 50.0);
    CHECK(ch.interference[6] == 60.0);
    CHECK(ch.interference[9] == 10.0);
    CHECK(ch.interference[10] == 0.0);
}

TEST_CASE("capacity grid evaluates the Shannon formula")
{
    ChannelRealization r;
    r.gains = Matrix<std::complex<double>>(1, 2, {1.0, 0.0});
    r.noise_psd = 0.1;
    r.interference = {0.0, 0.9};

    const auto g = capacity_grid(r, 1.0, 1.0);
    CHECK(g.snr(0, 0) == doctest::Approx(10.0));
    CHECK(g.capacities(0, 0) == doctest::Approx(std::log2(11.0)));
    CHECK(g.capacities(0, 0) == doctest::Approx(3.459).epsilon(1e-3));
    CHECK(g.capacities(0, 1) == doctest::Approx(1.0));

    const auto zero = capacity_grid(r, 0.0, 1.0);
    CHECK(zero.capacities(0, 0) == 0.0);
    CHECK(zero.capacities(0, 1) == 0.0);

    const std::vector<double> per_sc{0.0, 2.0};
    const auto mixed = capacity_grid(r, per_sc, 2.0);
    CHECK(mixed.capacities(0, 0) == 0.0);
    CHECK(mixed.capacities(0, 1) == doctest::Approx(2.0 * std::log2(3.0)));

    CHECK_THROWS(capacity_grid(r, -1.0, 1.0));
}

TEST_CASE("invalid channel configuration is rejected")
{
    ScenarioConfig c = small(1, 16, 0);
    CHECK_THROWS_AS(generate_channel(c, 1), ConfigError);
    c = small(1, 0, 4);
    CHECK_THROWS_AS(generate_channel(c, 1), ConfigError);
}

TEST_CASE("capacity is monotone in power and interference")
{
    ScenarioConfig c = small(3, 128, 8);
    const auto clean = generate_channel(c, 5);
    c.interference = {{10, 40, 30.0}};
    const auto dirty = generate_channel(c, 5);
    const auto lo = capacity_grid(clean, 2.0, 1.0);
    const auto hi = capacity_grid(clean, 4.0, 1.0);
    const auto hit = capacity_grid(dirty, 2.0, 1.0);
    for (GsIndex n = 0; n < 3; ++n)
        for (ScIndex i = 0; i < 128; ++i) {
            if (std::norm(clean.gains(n, i)) > 0.0)
                CHECK(hi.capacities(n, i) > lo.capacities(n, i));
            CHECK(hit.capacities(n, i) <= lo.capacities(n, i));
            if (i >= 10 && i <= 40)
                CHECK(hit.capacities(n, i) < lo.capacities(n, i));
        }
}
