#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stego {

// Payload framing shared by the Lucas engine and all baselines: a
// 32-bit big-endian message bit count, one zero pad bit (so the header
// fills eleven 3-bit groups exactly), then the message bits MSB-first.
inline constexpr std::uint32_t kHeaderBits = 33;

/// Bytes to bits, MSB-first.  Each output element is 0 or 1.
std::vector<std::uint8_t> bytes_to_bits(std::span<const std::uint8_t> bytes);

/// Inverse of bytes_to_bits; bits.size() must be a multiple of 8.
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

/// Header + message bit stream ready for embedding.
std::vector<std::uint8_t> frame_message(std::span<const std::uint8_t> message);

/// Message bit count from the first 32 bits of an extracted stream.
std::uint32_t parse_header(std::span<const std::uint8_t> header_bits);

}  // namespace stego
