#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stego {

// Lucas terms L1..L12 with the seeds L1 = 2, L2 = 1.  Twelve terms are
// enough to represent every 8-bit sample value.  Note the value order
// quirk at the front: L1 = 2 is larger than L2 = 1.
inline constexpr int kLucasCount = 12;
inline constexpr std::array<int, kLucasCount> kLucasTerms{
    2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199};

/// First n Lucas terms, index order L1..Ln.  Throws std::out_of_range
/// unless 1 <= n <= 12.
std::vector<int> lucas_sequence(int n);

// Canonical 12-flag Lucas representation of a sample value.  Flag i
// (1-based) multiplies the term L_i.  Canonical forms never set two
// adjacent flags, and never set the flags of the terms valued 2 and 3
// together (the classical side condition that makes the representation
// unique).
class LucasBits {
public:
    LucasBits() = default;
    explicit LucasBits(std::uint16_t mask) : mask_(mask) {}

    bool test(int index) const { return (mask_ >> (index - 1)) & 1u; }

    void set(int index, bool on = true) {
        const std::uint16_t bit = std::uint16_t(1u << (index - 1));
        mask_ = on ? std::uint16_t(mask_ | bit) : std::uint16_t(mask_ & ~bit);
    }

    std::uint16_t mask() const { return mask_; }

    /// Flag string printed d12 (leftmost) to d1 (rightmost).
    std::string to_string() const;

    friend bool operator==(const LucasBits&, const LucasBits&) = default;

private:
    std::uint16_t mask_ = 0;  // bit i-1 holds d_i
};

/// Greedy largest-value-first decomposition of v in [0, 255] into
/// non-consecutive Lucas terms.  Throws std::out_of_range otherwise.
LucasBits decompose(int value);

/// Plain weighted sum of the set flags.  Accepts non-canonical flag
/// sets; the result may exceed 255 and callers decide what that means.
int recompose(const LucasBits& bits);

/// The seven low flags d7..d1 packed into bits 6..0 (bit i-1 = d_i).
/// These are the only flags the embedding ever touches.
std::uint8_t low7(const LucasBits& bits);

}  // namespace stego
