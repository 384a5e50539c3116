#pragma once

#include <vector>

#include "stego/image.hpp"

namespace stego {

struct ChiSquarePoint {
    double prefix_fraction = 1.0;
    double chi2 = 0.0;
    int dof = 0;
    double index = 0.0;  // Q(dof/2, chi2/2); near 1 flags LSB-style embedding
};

struct ChiSquareReport {
    std::vector<ChiSquarePoint> points;
};

/// Upper regularized incomplete gamma Q(a, x), series for x < a+1 and
/// continued fraction otherwise.
double regularized_gamma_q(double a, double x);

/// Westfeld-Pfitzmann pair-of-values statistic over the first
/// floor(fraction * pixels) samples of each channel, raw row-major
/// order.  Color images analyze every channel and report the one with
/// the largest index.
ChiSquarePoint chi_square_index(const ImageBuffer& image, double prefix_fraction);

/// chi_square_index at prefix fractions k/steps, k = 1..steps.
ChiSquareReport chi_square_curve(const ImageBuffer& image, int steps);

}  // namespace stego
