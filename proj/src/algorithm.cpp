#include "stego/algorithm.hpp"

#include <stdexcept>

#include "stego/framing.hpp"

namespace stego {

Algorithm parse_algorithm(const std::string& name) {
    if (name == "lucas") return Algorithm::lucas;
    if (name == "lsb") return Algorithm::lsb;
    if (name == "lsbm") return Algorithm::lsbm;
    if (name == "lsbmr") return Algorithm::lsbmr;
    throw std::invalid_argument("unknown algorithm '" + name +
                                "' (want lucas, lsb, lsbm or lsbmr)");
}

std::string algorithm_name(Algorithm algo) {
    switch (algo) {
        case Algorithm::lucas: return "lucas";
        case Algorithm::lsb: return "lsb";
        case Algorithm::lsbm: return "lsbm";
        case Algorithm::lsbmr: return "lsbmr";
    }
    throw std::invalid_argument("bad algorithm enum");
}

std::uint64_t usable_bits(Algorithm algo, const ImageBuffer& image) {
    const std::uint64_t n = image.sample_count();
    std::uint64_t raw = 0;
    switch (algo) {
        case Algorithm::lucas: raw = 3 * n; break;
        case Algorithm::lsb:
        case Algorithm::lsbm: raw = n; break;
        case Algorithm::lsbmr: raw = 2 * (n / 2); break;
    }
    return raw > kHeaderBits ? raw - kHeaderBits : 0;
}

AlgoResult algo_embed(Algorithm algo, const ImageBuffer& cover,
                      std::span<const std::uint8_t> message, std::uint64_t seed,
                      Traversal traversal) {
    if (algo == Algorithm::lucas) {
        EmbedOptions opts{seed, traversal, ChannelPolicy::all};
        EmbedResult r = embed(cover, message, opts);
        return {std::move(r.stego), std::move(r.log), r.embedded_bits};
    }
    BaselineOptions opts{seed, traversal};
    BaselineResult r = algo == Algorithm::lsb    ? lsb_embed(cover, message, opts)
                       : algo == Algorithm::lsbm ? lsbm_embed(cover, message, opts)
                                                 : lsbmr_embed(cover, message, opts);
    return {std::move(r.stego), std::move(r.log), r.embedded_bits};
}

std::vector<std::uint8_t> algo_extract(Algorithm algo, const ImageBuffer& stego,
                                       std::uint64_t seed, Traversal traversal) {
    if (algo == Algorithm::lucas) {
        return extract(stego, EmbedOptions{seed, traversal, ChannelPolicy::all});
    }
    BaselineOptions opts{seed, traversal};
    switch (algo) {
        case Algorithm::lsb: return lsb_extract(stego, opts);
        case Algorithm::lsbm: return lsbm_extract(stego, opts);
        default: return lsbmr_extract(stego, opts);
    }
}

}  // namespace stego
