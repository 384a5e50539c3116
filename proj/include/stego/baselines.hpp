#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stego/engine.hpp"
#include "stego/image.hpp"
#include "stego/traversal.hpp"

namespace stego {

struct BaselineOptions {
    std::uint64_t seed = 0;  // drives LSBM's random +/-1 and the traversal
    Traversal traversal = Traversal::sequential;
};

struct BaselineResult {
    ImageBuffer stego;
    ChangeLog log;
    std::uint64_t embedded_bits = 0;
};

// LSB replacement: the k-th framed bit overwrites the binary LSB of the
// k-th traversed sample.
BaselineResult lsb_embed(const ImageBuffer& cover,
                         std::span<const std::uint8_t> message,
                         const BaselineOptions& opts);
std::vector<std::uint8_t> lsb_extract(const ImageBuffer& stego,
                                      const BaselineOptions& opts);

// LSB matching: when the bit disagrees with the sample LSB, add +/-1
// chosen by a seeded coin; forced +1 at 0 and -1 at 255.  Extraction is
// identical to LSB replacement.
BaselineResult lsbm_embed(const ImageBuffer& cover,
                          std::span<const std::uint8_t> message,
                          const BaselineOptions& opts);
std::vector<std::uint8_t> lsbm_extract(const ImageBuffer& stego,
                                       const BaselineOptions& opts);

// LSB matching revisited: consecutive traversal positions pair up; the
// first sample's LSB carries one bit and LSB(floor(x1/2) + x2) carries
// the other, with at most one +/-1 change per pair (boundary corners
// aside).
BaselineResult lsbmr_embed(const ImageBuffer& cover,
                           std::span<const std::uint8_t> message,
                           const BaselineOptions& opts);
std::vector<std::uint8_t> lsbmr_extract(const ImageBuffer& stego,
                                        const BaselineOptions& opts);

}  // namespace stego
