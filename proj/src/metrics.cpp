#include "stego/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stego/errors.hpp"

namespace stego {

double mse(const ImageBuffer& a, const ImageBuffer& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.channels != b.channels) {
        throw FormatError("mse: image shapes differ");
    }
    if (a.samples.empty()) {
        throw FormatError("mse: empty images");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = double(a.samples[i]) - double(b.samples[i]);
        sum += d * d;
    }
    return sum / double(a.samples.size());
}

double psnr(double mse_value) {
    if (!(mse_value >= 0.0)) {
        throw std::domain_error("psnr: mse must be non-negative");
    }
    if (mse_value == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

ModificationRates modification_stats(const ChangeLog& log,
                                     std::uint64_t total_samples,
                                     std::uint64_t embedded_bits) {
    if (total_samples == 0 || embedded_bits == 0) {
        throw std::domain_error("modification_stats: totals must be positive");
    }
    ModificationRates rates;
    rates.rate_per_sample = double(log.size()) / double(total_samples);
    rates.rate_per_bit = double(log.size()) / double(embedded_bits);
    return rates;
}

QualityReport quality_report(const ImageBuffer& cover, const ImageBuffer& stego,
                             const ChangeLog& log, std::uint64_t embedded_bits) {
    QualityReport report;
    report.mse = mse(cover, stego);
    report.psnr_db = psnr(report.mse);
    report.changed_samples = log.size();
    report.total_samples = cover.sample_count();
    const auto rates = modification_stats(log, report.total_samples,
                                          embedded_bits ? embedded_bits : 1);
    report.rate_per_sample = rates.rate_per_sample;
    report.rate_per_bit = rates.rate_per_bit;
    return report;
}

}  // namespace stego
