#include "stego/syndrome.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "stego/lucas.hpp"

namespace stego {
namespace {

inline unsigned bit(SevenBits b, int i) { return (b >> (i - 1)) & 1u; }

// Syndrome delta caused by flipping bit i, per the parity equations.
constexpr std::uint8_t kFlipDelta[8] = {
    0,
    0b111,  // b1 feeds f3, f2, f1
    0b001,  // b2 feeds f1
    0b010,  // b3 feeds f2
    0b011,  // b4 feeds f2, f1
    0b100,  // b5 feeds f3
    0b101,  // b6 feeds f3, f1
    0b110,  // b7 feeds f3, f2
};

}  // namespace

std::string Syndrome::to_string() const {
    return {f3() ? '1' : '0', f2() ? '1' : '0', f1() ? '1' : '0'};
}

Syndrome syndrome_of(SevenBits b) {
    const unsigned f3 = bit(b, 1) ^ bit(b, 5) ^ bit(b, 6) ^ bit(b, 7);
    const unsigned f2 = bit(b, 1) ^ bit(b, 3) ^ bit(b, 4) ^ bit(b, 7);
    const unsigned f1 = bit(b, 1) ^ bit(b, 2) ^ bit(b, 4) ^ bit(b, 6);
    return Syndrome{std::uint8_t((f3 << 2) | (f2 << 1) | f1)};
}

FlipPlan flip_for(Syndrome current, Syndrome target) {
    const std::uint8_t delta = current.value ^ target.value;
    if (delta == 0) return FlipPlan{0};
    for (int i = 1; i <= 7; ++i) {
        if (kFlipDelta[i] == delta) return FlipPlan{i};
    }
    throw std::logic_error("flip_for: unreachable syndrome delta");
}

SevenBits apply_flip(SevenBits b, FlipPlan plan) {
    if (plan.none()) return b;
    return SevenBits(b ^ (1u << (plan.bit - 1)));
}

std::uint8_t solve_stego_value(std::uint8_t value, Syndrome target) {
    auto matches = [&](int candidate) {
        return syndrome_of(low7(decompose(candidate))) == target;
    };
    // Scan outward by distance; at equal distance prefer the larger value.
    for (int d = 0; d < 256; ++d) {
        if (value + d <= 255 && matches(value + d)) return std::uint8_t(value + d);
        if (value - d >= 0 && matches(value - d)) return std::uint8_t(value - d);
    }
    throw std::logic_error("solve_stego_value: no candidate found");
}

SolveTable::SolveTable() {
    for (int v = 0; v <= 255; ++v) {
        for (std::uint8_t t = 0; t < 8; ++t) {
            table_[v][t] = solve_stego_value(std::uint8_t(v), Syndrome{t});
        }
    }
}

int SolveTable::max_distortion() const {
    int worst = 0;
    for (int v = 0; v <= 255; ++v) {
        for (int t = 0; t < 8; ++t) {
            worst = std::max(worst, std::abs(int(table_[v][t]) - v));
        }
    }
    return worst;
}

void SolveTable::write_csv(std::ostream& out) const {
    out << "v,t000,t001,t010,t011,t100,t101,t110,t111\n";
    for (int v = 0; v <= 255; ++v) {
        out << v;
        for (int t = 0; t < 8; ++t) out << ',' << int(table_[v][t]);
        out << '\n';
    }
}

SolveTable build_solve_table() { return SolveTable{}; }

const SolveTable& solve_table() {
    static const SolveTable table;
    return table;
}

}  // namespace stego
