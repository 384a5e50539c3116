#include "stego/engine.hpp"

#include <string>

#include "stego/errors.hpp"
#include "stego/framing.hpp"
#include "stego/lucas.hpp"
#include "stego/syndrome.hpp"

namespace stego {
namespace {

constexpr std::size_t kHeaderGroups = 11;  // 33 bits / 3

void check_carrier(const ImageBuffer& image, const EmbedOptions& opts) {
    if (image.samples.empty()) {
        throw FormatError("embed: empty image");
    }
    if (opts.channels == ChannelPolicy::gray_only && image.channels != 1) {
        throw FormatError("embed: gray-only policy but carrier has " +
                          std::to_string(image.channels) + " channels");
    }
}

Syndrome group_at(std::span<const std::uint8_t> bits, std::size_t k) {
    // Bits are consumed as (f3, f2, f1); missing bits pad with zero.
    std::uint8_t value = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t pos = 3 * k + i;
        const unsigned b = pos < bits.size() ? bits[pos] : 0u;
        value = std::uint8_t((value << 1) | b);
    }
    return Syndrome{value};
}

}  // namespace

std::uint64_t capacity(const ImageBuffer& image) {
    return 3 * std::uint64_t(image.sample_count());
}

EmbedResult embed(const ImageBuffer& cover, std::span<const std::uint8_t> message,
                  const EmbedOptions& opts) {
    check_carrier(cover, opts);
    const std::size_t n = cover.sample_count();
    if (n < kHeaderGroups) {
        throw CapacityError("embed: image has " + std::to_string(n) +
                            " samples, need at least 11 for the header");
    }
    const std::uint64_t total = capacity(cover);
    const std::uint64_t needed = 8 * std::uint64_t(message.size());
    if (needed > total - kHeaderBits) {
        throw CapacityError("embed: message needs " + std::to_string(needed) +
                            " bits but only " + std::to_string(total - kHeaderBits) +
                            " are available");
    }

    const auto bits = frame_message(message);
    const std::size_t groups = (bits.size() + 2) / 3;
    const auto order = traversal_order(opts.seed, n, opts.traversal);
    const SolveTable& table = solve_table();

    EmbedResult result;
    result.stego = cover;
    result.embedded_bits = bits.size();
    for (std::size_t k = 0; k < groups; ++k) {
        const std::uint32_t index = order[k];
        const std::uint8_t old_value = result.stego.samples[index];
        const std::uint8_t new_value = table.lookup(old_value, group_at(bits, k));
        if (new_value != old_value) {
            result.stego.samples[index] = new_value;
            result.log.entries.push_back({index, old_value, new_value});
        }
    }
    return result;
}

std::vector<std::uint8_t> extract(const ImageBuffer& stego, const EmbedOptions& opts) {
    check_carrier(stego, opts);
    const std::size_t n = stego.sample_count();
    if (n < kHeaderGroups) {
        throw CorruptStegoError("extract: image too small to hold a header");
    }
    const auto order = traversal_order(opts.seed, n, opts.traversal);
    auto read_group = [&](std::size_t k) {
        return syndrome_of(low7(decompose(stego.samples[order[k]])));
    };

    std::vector<std::uint8_t> header_bits;
    header_bits.reserve(kHeaderBits);
    for (std::size_t k = 0; k < kHeaderGroups; ++k) {
        const Syndrome s = read_group(k);
        header_bits.push_back(s.f3());
        header_bits.push_back(s.f2());
        header_bits.push_back(s.f1());
    }
    const std::uint32_t bit_length = parse_header(header_bits);
    if (bit_length % 8 != 0) {
        throw CorruptStegoError("extract: header bit length " +
                                std::to_string(bit_length) +
                                " is not a whole number of bytes");
    }
    const std::uint64_t remaining = 3 * std::uint64_t(n - kHeaderGroups);
    if (bit_length > remaining) {
        throw CorruptStegoError("extract: header claims " + std::to_string(bit_length) +
                                " bits but only " + std::to_string(remaining) +
                                " fit in the image");
    }

    std::vector<std::uint8_t> bits;
    bits.reserve(bit_length + 2);
    const std::size_t groups = (bit_length + 2) / 3;
    for (std::size_t k = 0; k < groups; ++k) {
        const Syndrome s = read_group(kHeaderGroups + k);
        bits.push_back(s.f3());
        bits.push_back(s.f2());
        bits.push_back(s.f1());
    }
    bits.resize(bit_length);
    return bits_to_bytes(bits);
}

}  // namespace stego
