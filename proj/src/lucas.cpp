#include "stego/lucas.hpp"

#include <algorithm>
#include <stdexcept>

namespace stego {

std::vector<int> lucas_sequence(int n) {
    if (n < 1 || n > kLucasCount) {
        throw std::out_of_range("lucas_sequence: n must be in 1..12, got " +
                                std::to_string(n));
    }
    return std::vector<int>(kLucasTerms.begin(), kLucasTerms.begin() + n);
}

std::string LucasBits::to_string() const {
    std::string s(kLucasCount, '0');
    for (int i = 1; i <= kLucasCount; ++i) {
        if (test(i)) s[kLucasCount - i] = '1';
    }
    return s;
}

LucasBits decompose(int value) {
    if (value < 0 || value > 255) {
        throw std::out_of_range("decompose: value must be in 0..255, got " +
                                std::to_string(value));
    }
    // Term indices sorted by value descending: L12..L3, then L1 (=2), L2 (=1).
    static const std::array<int, kLucasCount> by_value = [] {
        std::array<int, kLucasCount> idx{};
        for (int i = 0; i < kLucasCount; ++i) idx[i] = i + 1;
        std::sort(idx.begin(), idx.end(),
                  [](int a, int b) { return kLucasTerms[a - 1] > kLucasTerms[b - 1]; });
        return idx;
    }();

    LucasBits bits;
    int remainder = value;
    for (int index : by_value) {
        if (remainder == 0) break;
        if (kLucasTerms[index - 1] <= remainder) {
            bits.set(index);
            remainder -= kLucasTerms[index - 1];
        }
    }
    return bits;
}

int recompose(const LucasBits& bits) {
    int sum = 0;
    for (int i = 1; i <= kLucasCount; ++i) {
        if (bits.test(i)) sum += kLucasTerms[i - 1];
    }
    return sum;
}

std::uint8_t low7(const LucasBits& bits) {
    return std::uint8_t(bits.mask() & 0x7Fu);
}

}  // namespace stego
