#pragma once

#include <cstdint>
#include <vector>

namespace stego {

// splitmix64: the reference mixing constants, so permutations are
// reproducible across independent implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

enum class Traversal { sequential, permuted };

/// Sample visiting order: identity for sequential, Fisher-Yates over a
/// splitmix64 stream for permuted (swap i with next() % (i+1), i from
/// n-1 down to 1).
std::vector<std::uint32_t> traversal_order(std::uint64_t seed, std::size_t n,
                                           Traversal mode);

}  // namespace stego
