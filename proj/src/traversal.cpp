#include "stego/traversal.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace stego {

std::vector<std::uint32_t> traversal_order(std::uint64_t seed, std::size_t n,
                                           Traversal mode) {
    if (n < 1) {
        throw std::invalid_argument("traversal_order: n must be at least 1");
    }
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    if (mode == Traversal::permuted) {
        SplitMix64 rng(seed);
        for (std::size_t i = n - 1; i > 0; --i) {
            const std::size_t j = std::size_t(rng.next() % (i + 1));
            std::swap(order[i], order[j]);
        }
    }
    return order;
}

}  // namespace stego
