#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace stego {

// Seven carrier bits b7..b1 packed into bits 6..0 (bit i-1 = b_i).
// b_i corresponds to the Lucas flag d_i of the sample.
using SevenBits = std::uint8_t;

// Three-bit message group.  value packs f3 f2 f1 into bits 2..0.
struct Syndrome {
    std::uint8_t value = 0;

    bool f3() const { return (value >> 2) & 1u; }
    bool f2() const { return (value >> 1) & 1u; }
    bool f1() const { return value & 1u; }

    std::string to_string() const;

    friend bool operator==(Syndrome, Syndrome) = default;
};

/// XOR parities of the seven carrier bits:
///   f3 = b1^b5^b6^b7, f2 = b1^b3^b4^b7, f1 = b1^b2^b4^b6.
Syndrome syndrome_of(SevenBits b);

// Which single bit to flip, if any, to steer a syndrome to a target.
struct FlipPlan {
    int bit = 0;  // 0 = no change, otherwise 1..7
    bool none() const { return bit == 0; }
};

/// The unique at-most-one-bit flip taking `current` to `target`.
FlipPlan flip_for(Syndrome current, Syndrome target);

SevenBits apply_flip(SevenBits b, FlipPlan plan);

/// Nearest value in [0, 255] whose canonical low-7 syndrome equals the
/// target; ties break toward the larger value.  Exhaustive search.
std::uint8_t solve_stego_value(std::uint8_t value, Syndrome target);

// Precomputed solve_stego_value over all 256 x 8 (value, target) pairs.
class SolveTable {
public:
    SolveTable();

    std::uint8_t lookup(std::uint8_t value, Syndrome target) const {
        return table_[value][target.value];
    }

    /// max |lookup(v, t) - v| over the whole table.
    int max_distortion() const;

    /// CSV dump, columns: v, t000..t111.
    void write_csv(std::ostream& out) const;

private:
    std::array<std::array<std::uint8_t, 8>, 256> table_{};
};

SolveTable build_solve_table();

/// Shared immutable instance, built on first use.
const SolveTable& solve_table();

}  // namespace stego
