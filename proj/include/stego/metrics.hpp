#pragma once

#include <cstdint>

#include "stego/engine.hpp"
#include "stego/image.hpp"

namespace stego {

struct ModificationRates {
    double rate_per_sample = 0.0;  // changed samples / total samples
    double rate_per_bit = 0.0;     // changed samples / embedded bits
};

struct QualityReport {
    double mse = 0.0;
    double psnr_db = 0.0;  // +infinity when mse == 0
    std::uint64_t changed_samples = 0;
    std::uint64_t total_samples = 0;
    double rate_per_sample = 0.0;
    double rate_per_bit = 0.0;
};

/// Mean squared error over all samples; throws FormatError on shape
/// mismatch.
double mse(const ImageBuffer& a, const ImageBuffer& b);

/// 10 log10(255^2 / mse); +infinity for mse == 0.
double psnr(double mse_value);

ModificationRates modification_stats(const ChangeLog& log,
                                     std::uint64_t total_samples,
                                     std::uint64_t embedded_bits);

QualityReport quality_report(const ImageBuffer& cover, const ImageBuffer& stego,
                             const ChangeLog& log, std::uint64_t embedded_bits);

}  // namespace stego
