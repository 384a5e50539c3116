#include "stego/chi_square.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stego/errors.hpp"

namespace stego {
namespace {

constexpr double kEps = 1e-15;
constexpr int kMaxIter = 500;

// Lower regularized gamma P(a, x) by power series.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a, x) by Lentz continued fraction.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

ChiSquarePoint analyze_channel(const ImageBuffer& image, int channel,
                               double prefix_fraction) {
    const std::size_t prefix_pixels =
        std::size_t(prefix_fraction * double(image.pixel_count()));
    std::array<std::uint64_t, 256> h{};
    for (std::size_t p = 0; p < prefix_pixels; ++p) {
        ++h[image.samples[p * image.channels + channel]];
    }

    double chi2 = 0.0;
    int kept = 0;
    for (int k = 0; k < 128; ++k) {
        const double expected = (double(h[2 * k]) + double(h[2 * k + 1])) / 2.0;
        if (expected == 0.0) continue;
        const double diff = double(h[2 * k]) - expected;
        chi2 += diff * diff / expected;
        ++kept;
    }
    if (kept < 2) {
        throw InsufficientDataError(
            "chi_square_index: only " + std::to_string(kept) +
            " non-empty value pairs in the prefix");
    }
    ChiSquarePoint point;
    point.prefix_fraction = prefix_fraction;
    point.chi2 = chi2;
    point.dof = kept - 1;
    point.index = regularized_gamma_q(point.dof / 2.0, chi2 / 2.0);
    return point;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (!std::isfinite(a) || !std::isfinite(x) || a <= 0.0 || x < 0.0) {
        throw std::domain_error("regularized_gamma_q: need finite a > 0, x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

ChiSquarePoint chi_square_index(const ImageBuffer& image, double prefix_fraction) {
    if (!(prefix_fraction > 0.0) || prefix_fraction > 1.0) {
        throw std::invalid_argument("chi_square_index: fraction must be in (0, 1]");
    }
    if (image.samples.empty()) {
        throw InsufficientDataError("chi_square_index: empty image");
    }
    ChiSquarePoint best;
    bool have = false;
    for (int ch = 0; ch < image.channels; ++ch) {
        const ChiSquarePoint point = analyze_channel(image, ch, prefix_fraction);
        if (!have || point.index > best.index) {
            best = point;
            have = true;
        }
    }
    return best;
}

ChiSquareReport chi_square_curve(const ImageBuffer& image, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("chi_square_curve: steps must be at least 1");
    }
    ChiSquareReport report;
    report.points.reserve(steps);
    for (int k = 1; k <= steps; ++k) {
        report.points.push_back(chi_square_index(image, double(k) / double(steps)));
    }
    return report;
}

}  // namespace stego
