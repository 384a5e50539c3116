#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <set>
#include <vector>

#include "stego/lucas.hpp"

using namespace stego;

namespace {

// Independent oracle: all 12-flag subsets that are non-consecutive and
// never combine the terms valued 2 (d1) and 3 (d3), the classical side
// condition that makes the representation unique.
std::vector<LucasBits> canonical_subsets_summing_to(int value) {
    std::vector<LucasBits> hits;
    for (unsigned mask = 0; mask < 4096; ++mask) {
        if (mask & (mask << 1)) continue;           // adjacent flags
        if ((mask & 0b101) == 0b101) continue;      // d1 and d3 together
        const LucasBits bits{std::uint16_t(mask)};
        if (recompose(bits) == value) hits.push_back(bits);
    }
    return hits;
}

bool is_canonical(const LucasBits& bits) {
    const unsigned mask = bits.mask();
    return (mask & (mask << 1)) == 0 && (mask & 0b101u) != 0b101u;
}

}  // namespace

TEST_CASE("lucas_sequence returns the expected terms") {
    CHECK(lucas_sequence(12) ==
          std::vector<int>{2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199});
    CHECK(lucas_sequence(2) == std::vector<int>{2, 1});
    CHECK(lucas_sequence(5) == std::vector<int>{2, 1, 3, 4, 7});
}

TEST_CASE("lucas_sequence obeys the recurrence") {
    const auto terms = lucas_sequence(12);
    for (int n = 2; n < 12; ++n) {
        CHECK(terms[n] == terms[n - 1] + terms[n - 2]);
    }
}

TEST_CASE("lucas_sequence rejects out-of-range lengths") {
    CHECK_THROWS_AS(lucas_sequence(0), std::out_of_range);
    CHECK_THROWS_AS(lucas_sequence(13), std::out_of_range);
    CHECK_THROWS_AS(lucas_sequence(-1), std::out_of_range);
}

TEST_CASE("decompose matches the printed examples") {
    CHECK(decompose(26).to_string() == "000001010010");
    CHECK(decompose(0).to_string() == "000000000000");

    const LucasBits five = decompose(5);
    CHECK(five.test(4));
    CHECK(five.test(2));
    CHECK(five.mask() == ((1u << 3) | (1u << 1)));
}

TEST_CASE("decompose rejects out-of-range values") {
    CHECK_THROWS_AS(decompose(-1), std::out_of_range);
    CHECK_THROWS_AS(decompose(256), std::out_of_range);
}

TEST_CASE("recompose sums flags, canonical or not") {
    LucasBits printed;
    printed.set(7);
    printed.set(5);
    printed.set(2);
    CHECK(recompose(printed) == 26);

    LucasBits cleared = printed;
    cleared.set(5, false);
    CHECK(recompose(cleared) == 19);
    CHECK(cleared.to_string() == "000001000010");

    CHECK(recompose(LucasBits{}) == 0);

    // Non-canonical all-flags input just sums past 255.
    CHECK(recompose(LucasBits{0x0FFF}) == 520);
}

TEST_CASE("exhaustive round trip, canonicality and uniqueness oracle") {
    for (int v = 0; v <= 255; ++v) {
        const LucasBits bits = decompose(v);
        CHECK(recompose(bits) == v);
        CHECK(is_canonical(bits));
        const auto subsets = canonical_subsets_summing_to(v);
        REQUIRE(subsets.size() == 1);
        CHECK(subsets[0] == bits);
    }
}

TEST_CASE("plain non-consecutivity alone is ambiguous for 5") {
    // 5 = 4 + 1 (L4 + L2) but also 3 + 2 (L3 + L1); both index sets are
    // non-consecutive.  The d1/d3 exclusion picks the greedy form.
    int count = 0;
    for (unsigned mask = 0; mask < 4096; ++mask) {
        if (mask & (mask << 1)) continue;
        if (recompose(LucasBits{std::uint16_t(mask)}) == 5) ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("bit-clearing sensitivity: Lucas beats binary for 26") {
    LucasBits bits = decompose(26);
    bits.set(5, false);
    const int lucas_altered = recompose(bits);
    CHECK(lucas_altered == 19);
    const int binary_altered = 26 & ~(1 << 4);  // clearing binary bit 5
    CHECK(binary_altered == 10);
    CHECK(std::abs(26 - lucas_altered) < std::abs(26 - binary_altered));
}

TEST_CASE("low7 exposes d7..d1") {
    const auto b26 = low7(decompose(26));
    CHECK(b26 == 0b1010010);  // b7, b5, b2

    CHECK(low7(decompose(0)) == 0);

    // 255 = 199 + 47 + 7 + 2 (L12, L9, L5, L1).
    const LucasBits b255 = decompose(255);
    CHECK(b255.to_string() == "100100010001");
    CHECK(low7(b255) == 0b0010001);
}

TEST_CASE("high flags are invisible to low7") {
    for (int v = 0; v <= 255; ++v) {
        const LucasBits bits = decompose(v);
        CHECK((low7(bits) & ~0x7F) == 0);
        for (int i = 8; i <= 12; ++i) {
            LucasBits stripped = bits;
            stripped.set(i, false);
            CHECK(low7(stripped) == low7(bits));
        }
    }
}
