#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stego/baselines.hpp"
#include "stego/engine.hpp"

namespace stego {

enum class Algorithm { lucas, lsb, lsbm, lsbmr };

/// Parse "lucas" / "lsb" / "lsbm" / "lsbmr"; throws std::invalid_argument.
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algo);

/// Usable payload bits for an algorithm on a carrier (capacity minus
/// the 33-bit header).
std::uint64_t usable_bits(Algorithm algo, const ImageBuffer& image);

struct AlgoResult {
    ImageBuffer stego;
    ChangeLog log;
    std::uint64_t embedded_bits = 0;
};

AlgoResult algo_embed(Algorithm algo, const ImageBuffer& cover,
                      std::span<const std::uint8_t> message, std::uint64_t seed,
                      Traversal traversal);

std::vector<std::uint8_t> algo_extract(Algorithm algo, const ImageBuffer& stego,
                                       std::uint64_t seed, Traversal traversal);

}  // namespace stego
