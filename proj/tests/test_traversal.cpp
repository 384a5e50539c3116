#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <algorithm>
#include <vector>

#include "stego/traversal.hpp"

using namespace stego;

TEST_CASE("sequential mode is the identity") {
    CHECK(traversal_order(99, 4, Traversal::sequential) ==
          std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("same seed gives the same permutation") {
    const auto a = traversal_order(123456, 1000, Traversal::permuted);
    const auto b = traversal_order(123456, 1000, Traversal::permuted);
    CHECK(a == b);
    const auto c = traversal_order(123457, 1000, Traversal::permuted);
    CHECK(a != c);
}

TEST_CASE("golden permutation for seed 1, n 8") {
    // Frozen from the reference splitmix64 stream driving Fisher-Yates.
    CHECK(traversal_order(1, 8, Traversal::permuted) ==
          std::vector<std::uint32_t>{4, 3, 2, 7, 5, 6, 0, 1});
}

TEST_CASE("permuted order is a permutation") {
    for (std::uint64_t seed : {0ULL, 7ULL, 0xDEADBEEFULL}) {
        auto order = traversal_order(seed, 513, Traversal::permuted);
        std::sort(order.begin(), order.end());
        for (std::uint32_t i = 0; i < order.size(); ++i) CHECK(order[i] == i);
    }
}

TEST_CASE("empty traversal is rejected") {
    CHECK_THROWS_AS(traversal_order(0, 0, Traversal::sequential),
                    std::invalid_argument);
}
