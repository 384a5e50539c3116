#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stego/image.hpp"
#include "stego/traversal.hpp"

namespace stego {

enum class ChannelPolicy { all, gray_only };

struct EmbedOptions {
    std::uint64_t seed = 0;
    Traversal traversal = Traversal::sequential;
    ChannelPolicy channels = ChannelPolicy::all;
};

struct ChangeEntry {
    std::uint64_t index = 0;  // flat row-major sample position
    std::uint8_t from = 0;
    std::uint8_t to = 0;
};

struct ChangeLog {
    std::vector<ChangeEntry> entries;
    std::size_t size() const { return entries.size(); }
};

struct EmbedResult {
    ImageBuffer stego;
    ChangeLog log;
    std::uint64_t embedded_bits = 0;  // header + message bits
};

/// Raw embedding capacity: 3 bits per sample.  The usable payload is
/// capacity minus the 33 header bits.
std::uint64_t capacity(const ImageBuffer& image);

/// Embed the message into a copy of the cover.  Header and message
/// bits are packed MSB-first into 3-bit syndrome groups; the k-th group
/// lands on the sample at traversal position k via the solve table.
EmbedResult embed(const ImageBuffer& cover, std::span<const std::uint8_t> message,
                  const EmbedOptions& opts);

/// Inverse of embed under identical options.
std::vector<std::uint8_t> extract(const ImageBuffer& stego, const EmbedOptions& opts);

}  // namespace stego
