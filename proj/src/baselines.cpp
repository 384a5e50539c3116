#include "stego/baselines.hpp"

#include <string>

#include "stego/errors.hpp"
#include "stego/framing.hpp"

namespace stego {
namespace {

// Salt keeping the LSBM coin stream distinct from the traversal stream.
constexpr std::uint64_t kCoinSalt = 0xA5A5A5A55A5A5A5AULL;

void check_capacity(std::size_t usable_bits, std::size_t message_bytes,
                    const char* algo) {
    const std::uint64_t needed = kHeaderBits + 8 * std::uint64_t(message_bytes);
    if (needed > usable_bits) {
        throw CapacityError(std::string(algo) + ": payload needs " +
                            std::to_string(needed) + " bits but only " +
                            std::to_string(usable_bits) + " are available");
    }
}

void check_nonempty(const ImageBuffer& image, const char* algo) {
    if (image.samples.empty()) {
        throw FormatError(std::string(algo) + ": empty image");
    }
}

void record(BaselineResult& result, std::uint64_t index, std::uint8_t from,
            std::uint8_t to) {
    if (from != to) result.log.entries.push_back({index, from, to});
}

// Parity relation of a LSBMR pair.
inline unsigned pair_relation(unsigned x1, unsigned x2) {
    return (x1 / 2 + x2) & 1u;
}

std::vector<std::uint8_t> read_lsb_stream(const ImageBuffer& stego,
                                          const BaselineOptions& opts,
                                          const char* algo) {
    check_nonempty(stego, algo);
    const std::size_t n = stego.sample_count();
    if (n < kHeaderBits) {
        throw CorruptStegoError(std::string(algo) + ": image too small for a header");
    }
    const auto order = traversal_order(opts.seed, n, opts.traversal);

    std::vector<std::uint8_t> header_bits(kHeaderBits);
    for (std::size_t k = 0; k < kHeaderBits; ++k) {
        header_bits[k] = stego.samples[order[k]] & 1u;
    }
    const std::uint32_t bit_length = parse_header(header_bits);
    if (bit_length % 8 != 0 || bit_length > n - kHeaderBits) {
        throw CorruptStegoError(std::string(algo) + ": implausible header bit length " +
                                std::to_string(bit_length));
    }
    std::vector<std::uint8_t> bits(bit_length);
    for (std::size_t k = 0; k < bit_length; ++k) {
        bits[k] = stego.samples[order[kHeaderBits + k]] & 1u;
    }
    return bits_to_bytes(bits);
}

}  // namespace

BaselineResult lsb_embed(const ImageBuffer& cover,
                         std::span<const std::uint8_t> message,
                         const BaselineOptions& opts) {
    check_nonempty(cover, "lsb");
    const std::size_t n = cover.sample_count();
    check_capacity(n, message.size(), "lsb");

    const auto bits = frame_message(message);
    const auto order = traversal_order(opts.seed, n, opts.traversal);
    BaselineResult result{cover, {}, bits.size()};
    for (std::size_t k = 0; k < bits.size(); ++k) {
        const std::uint32_t index = order[k];
        const std::uint8_t old_value = result.stego.samples[index];
        const std::uint8_t new_value = std::uint8_t((old_value & 0xFEu) | bits[k]);
        result.stego.samples[index] = new_value;
        record(result, index, old_value, new_value);
    }
    return result;
}

std::vector<std::uint8_t> lsb_extract(const ImageBuffer& stego,
                                      const BaselineOptions& opts) {
    return read_lsb_stream(stego, opts, "lsb");
}

BaselineResult lsbm_embed(const ImageBuffer& cover,
                          std::span<const std::uint8_t> message,
                          const BaselineOptions& opts) {
    check_nonempty(cover, "lsbm");
    const std::size_t n = cover.sample_count();
    check_capacity(n, message.size(), "lsbm");

    const auto bits = frame_message(message);
    const auto order = traversal_order(opts.seed, n, opts.traversal);
    SplitMix64 coin(opts.seed ^ kCoinSalt);
    BaselineResult result{cover, {}, bits.size()};
    for (std::size_t k = 0; k < bits.size(); ++k) {
        const std::uint32_t index = order[k];
        const std::uint8_t old_value = result.stego.samples[index];
        if ((old_value & 1u) == bits[k]) continue;
        int delta = (coin.next() & 1u) ? 1 : -1;
        if (old_value == 0) delta = 1;
        if (old_value == 255) delta = -1;
        const std::uint8_t new_value = std::uint8_t(int(old_value) + delta);
        result.stego.samples[index] = new_value;
        record(result, index, old_value, new_value);
    }
    return result;
}

std::vector<std::uint8_t> lsbm_extract(const ImageBuffer& stego,
                                       const BaselineOptions& opts) {
    return read_lsb_stream(stego, opts, "lsbm");
}

BaselineResult lsbmr_embed(const ImageBuffer& cover,
                           std::span<const std::uint8_t> message,
                           const BaselineOptions& opts) {
    check_nonempty(cover, "lsbmr");
    const std::size_t n = cover.sample_count();
    const std::size_t pairs = n / 2;  // odd trailing sample stays unused
    check_capacity(2 * pairs, message.size(), "lsbmr");

    auto bits = frame_message(message);
    if (bits.size() % 2 != 0) bits.push_back(0);
    const auto order = traversal_order(opts.seed, n, opts.traversal);
    BaselineResult result{cover, {}, bits.size()};

    auto bump = [](std::uint8_t v) -> std::uint8_t {
        return v == 255 ? std::uint8_t(254) : std::uint8_t(v + 1);
    };

    for (std::size_t p = 0; 2 * p < bits.size(); ++p) {
        const std::uint32_t i1 = order[2 * p];
        const std::uint32_t i2 = order[2 * p + 1];
        const std::uint8_t m1 = bits[2 * p];
        const std::uint8_t m2 = bits[2 * p + 1];
        std::uint8_t x1 = result.stego.samples[i1];
        std::uint8_t x2 = result.stego.samples[i2];
        const std::uint8_t old1 = x1;
        const std::uint8_t old2 = x2;

        if (m1 == (x1 & 1u)) {
            if (m2 != pair_relation(x1, x2)) x2 = bump(x2);
        } else if (x1 > 0 && x1 < 255) {
            x1 = (m2 == pair_relation(x1 - 1u, x2)) ? std::uint8_t(x1 - 1)
                                                    : std::uint8_t(x1 + 1);
        } else {
            // Boundary corner: only one direction exists for x1, so a
            // mismatched m2 spills into a second change on x2.
            x1 = (x1 == 0) ? std::uint8_t(1) : std::uint8_t(254);
            if (m2 != pair_relation(x1, x2)) x2 = bump(x2);
        }

        result.stego.samples[i1] = x1;
        result.stego.samples[i2] = x2;
        record(result, i1, old1, x1);
        record(result, i2, old2, x2);
    }
    return result;
}

std::vector<std::uint8_t> lsbmr_extract(const ImageBuffer& stego,
                                        const BaselineOptions& opts) {
    check_nonempty(stego, "lsbmr");
    const std::size_t n = stego.sample_count();
    const std::size_t pairs = n / 2;
    if (2 * pairs < kHeaderBits) {
        throw CorruptStegoError("lsbmr: image too small for a header");
    }
    const auto order = traversal_order(opts.seed, n, opts.traversal);
    auto bit_at = [&](std::size_t k) -> std::uint8_t {
        const std::uint8_t x1 = stego.samples[order[k & ~std::size_t(1)]];
        const std::uint8_t x2 = stego.samples[order[(k & ~std::size_t(1)) + 1]];
        return (k % 2 == 0) ? std::uint8_t(x1 & 1u)
                            : std::uint8_t(pair_relation(x1, x2));
    };

    std::vector<std::uint8_t> header_bits(kHeaderBits);
    for (std::size_t k = 0; k < kHeaderBits; ++k) header_bits[k] = bit_at(k);
    const std::uint32_t bit_length = parse_header(header_bits);
    if (bit_length % 8 != 0 || bit_length > 2 * pairs - kHeaderBits) {
        throw CorruptStegoError("lsbmr: implausible header bit length " +
                                std::to_string(bit_length));
    }
    std::vector<std::uint8_t> bits(bit_length);
    for (std::size_t k = 0; k < bit_length; ++k) bits[k] = bit_at(kHeaderBits + k);
    return bits_to_bytes(bits);
}

}  // namespace stego
