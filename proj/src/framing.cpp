#include "stego/framing.hpp"

#include <stdexcept>

namespace stego {

std::vector<std::uint8_t> bytes_to_bits(std::span<const std::uint8_t> bytes) {
    std::vector<std::uint8_t> bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes) {
        for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1u);
    }
    return bits;
}

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits) {
    if (bits.size() % 8 != 0) {
        throw std::invalid_argument("bits_to_bytes: bit count not a multiple of 8");
    }
    std::vector<std::uint8_t> bytes(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bytes[i / 8] = std::uint8_t((bytes[i / 8] << 1) | (bits[i] & 1u));
    }
    return bytes;
}

std::vector<std::uint8_t> frame_message(std::span<const std::uint8_t> message) {
    const std::uint64_t bit_length = std::uint64_t(message.size()) * 8;
    std::vector<std::uint8_t> bits;
    bits.reserve(kHeaderBits + bit_length);
    for (int i = 31; i >= 0; --i) bits.push_back(std::uint8_t((bit_length >> i) & 1u));
    bits.push_back(0);  // pad bit, header fills 11 groups
    const auto payload = bytes_to_bits(message);
    bits.insert(bits.end(), payload.begin(), payload.end());
    return bits;
}

std::uint32_t parse_header(std::span<const std::uint8_t> header_bits) {
    if (header_bits.size() < 32) {
        throw std::invalid_argument("parse_header: need at least 32 bits");
    }
    std::uint32_t bit_length = 0;
    for (int i = 0; i < 32; ++i) {
        bit_length = (bit_length << 1) | (header_bits[i] & 1u);
    }
    return bit_length;
}

}  // namespace stego
