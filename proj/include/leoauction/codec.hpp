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

#ifndef LEOAUCTION_CODEC_HPP
#define LEOAUCTION_CODEC_HPP

#include <cstddef>
#include <cstdint>

#include "leoauction/bidder.hpp"

namespace leoauction {

// Uplink bid message wire format: one 40-bit word, fields from the most
// significant end:
//
//   bits 39..30  start_sc        0 .. 1023
//   bits 29..20  length - 1      0 .. 1023  (group of 1 .. 1024 SCs)
//   bits 19..10  ratio_code      round(ratio * 1023)
//   bits  9..0   snr_code        round((min_snr_db + 20) / 0.1), clamped
//
// The SNR field spans [-20.0, +82.3] dB in 0.1 dB steps. When serialized to
// bytes the word is written big-endian in 5 octets.
namespace wire {
inline constexpr unsigned field_bits = 10;
inline constexpr std::uint64_t field_mask = (1u << field_bits) - 1;
inline constexpr unsigned message_bits = 4 * field_bits;
inline constexpr std::uint64_t word_limit = std::uint64_t{1} << message_bits;
inline constexpr double ratio_scale = 1023.0;
inline constexpr double snr_floor_db = -20.0;
inline constexpr double snr_step_db = 0.1;
}  // namespace wire

struct PackedBid
{
    std::uint64_t word = 0;

    bool operator==(const PackedBid &) const = default;
};

struct BidFields
{
    std::uint32_t start_sc = 0;
    std::uint32_t length_minus_one = 0;
    std::uint32_t ratio_code = 0;
    std::uint32_t snr_code = 0;
};

// Throws ProtocolError for a start/length outside the 10-bit fields or a
// ratio outside [0, 1].
PackedBid encode_bid(const BidMessage &message);
BidMessage decode_bid(PackedBid packed);

BidFields unpack_fields(PackedBid packed);
PackedBid pack_fields(const BidFields &fields);

// Uplink cost of a list of messages.
constexpr std::size_t overhead_bits(std::size_t message_count)
{
    return wire::message_bits * message_count;
}

}  // namespace leoauction

#endif  // LEOAUCTION_CODEC_HPP
