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

#include "leoauction/codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace leoauction {

PackedBid pack_fields(const BidFields &f)
{
    using namespace wire;
    const std::uint64_t word = (std::uint64_t{f.start_sc & field_mask} << 30) |
                               (std::uint64_t{f.length_minus_one & field_mask} << 20) |
                               (std::uint64_t{f.ratio_code & field_mask} << 10) |
                               std::uint64_t{f.snr_code & field_mask};
    return PackedBid{word};
}

BidFields unpack_fields(PackedBid packed)
{
    using namespace wire;
    const std::uint64_t w = packed.word;
    return BidFields{static_cast<std::uint32_t>((w >> 30) & field_mask),
                     static_cast<std::uint32_t>((w >> 20) & field_mask),
                     static_cast<std::uint32_t>((w >> 10) & field_mask),
                     static_cast<std::uint32_t>(w & field_mask)};
}

PackedBid encode_bid(const BidMessage &m)
{
    using namespace wire;
    if (m.start_sc > field_mask)
        throw ProtocolError("bid start_sc " + std::to_string(m.start_sc) + " does not fit 10 bits");
    if (m.length < 1 || m.length > field_mask + 1)
        throw ProtocolError("bid length " + std::to_string(m.length) + " outside [1, 1024]");
    if (!(m.ratio >= 0.0 && m.ratio <= 1.0))
        throw ProtocolError("bid ratio " + std::to_string(m.ratio) + " outside [0, 1]");

    BidFields f;
    f.start_sc = static_cast<std::uint32_t>(m.start_sc);
    f.length_minus_one = static_cast<std::uint32_t>(m.length - 1);
    f.ratio_code = static_cast<std::uint32_t>(std::lround(m.ratio * ratio_scale));

    // NaN and -inf (an SC with zero SNR) land on the floor code.
    double snr = (m.min_snr_db - snr_floor_db) / snr_step_db;
    if (!(snr >= 0.0))
        snr = 0.0;
    snr = std::min(snr, static_cast<double>(field_mask));
    f.snr_code = static_cast<std::uint32_t>(std::lround(snr));
    return pack_fields(f);
}

BidMessage decode_bid(PackedBid packed)
{
    using namespace wire;
    const auto f = unpack_fields(packed);
    BidMessage m;
    m.start_sc = f.start_sc;
    m.length = static_cast<std::size_t>(f.length_minus_one) + 1;
    m.ratio = static_cast<double>(f.ratio_code) / ratio_scale;
    m.min_snr_db = snr_floor_db + snr_step_db * static_cast<double>(f.snr_code);
    return m;
}

}  // namespace leoauction
