#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <cmath>

#include "stego/baselines.hpp"
#include "stego/chi_square.hpp"
#include "stego/engine.hpp"
#include "stego/errors.hpp"
#include "stego/framing.hpp"

#include "test_util.hpp"

using namespace stego;

TEST_CASE("regularized gamma Q reference values") {
    for (double a : {0.5, 1.0, 3.0, 63.5}) {
        CHECK(regularized_gamma_q(a, 0.0) == 1.0);
    }
    for (double x : {0.1, 1.0, 5.0, 20.0}) {
        CHECK(regularized_gamma_q(1.0, x) ==
              doctest::Approx(std::exp(-x)).epsilon(1e-10));
    }
    // Q(1/2, 1/2) equals the two-sided normal tail at z = 1.
    CHECK(regularized_gamma_q(0.5, 0.5) ==
          doctest::Approx(std::erfc(1.0 / std::sqrt(2.0))).epsilon(1e-4));
    CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_gamma_q(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_gamma_q(1.0, std::nan("")), std::domain_error);
}

TEST_CASE("index is monotone non-increasing in chi2 for fixed dof") {
    const double dof = 127.0;
    double previous = 1.0;
    for (double chi2 : {1.0, 10.0, 50.0, 127.0, 300.0, 1000.0}) {
        const double index = regularized_gamma_q(dof / 2.0, chi2 / 2.0);
        CHECK(index <= previous);
        previous = index;
    }
}

TEST_CASE("exact pair balance gives chi2 0 and index 1") {
    ImageBuffer image = make_image(16, 16, 1);
    for (std::size_t i = 0; i < image.samples.size(); ++i) {
        image.samples[i] = std::uint8_t(i % 8);  // h(2k) == h(2k+1)
    }
    const auto point = chi_square_index(image, 1.0);
    CHECK(point.chi2 == 0.0);
    CHECK(point.index == 1.0);
}

TEST_CASE("clean natural-like covers are not flagged") {
    for (std::uint64_t seed : {101ULL, 102ULL, 103ULL}) {
        const auto cover = testutil::natural_cover(seed, 256, 256);
        CHECK(chi_square_index(cover, 1.0).index < 0.1);
    }
}

TEST_CASE("sequential lsb replacement at full rate is flagged") {
    const auto cover = testutil::natural_cover(7, 256, 256);
    const std::size_t bytes = (cover.sample_count() - kHeaderBits) / 8;
    const auto message = testutil::random_bytes(8, bytes);
    const auto stego = lsb_embed(cover, message, BaselineOptions{}).stego;
    CHECK(chi_square_index(stego, 1.0).index >= 0.6);
}

TEST_CASE("lsb at half rate: curve high on the prefix, low after") {
    const auto cover = testutil::natural_cover(9, 256, 256);
    const std::size_t half_bytes = (cover.sample_count() / 2 - kHeaderBits) / 8;
    const auto message = testutil::random_bytes(10, half_bytes);
    const auto stego = lsb_embed(cover, message, BaselineOptions{}).stego;
    const auto report = chi_square_curve(stego, 10);
    REQUIRE(report.points.size() == 10);
    for (int k = 0; k < 4; ++k) {
        CHECK(report.points[k].index > 0.5);  // inside the embedded prefix
    }
    CHECK(report.points[9].index < 0.1);  // whole image dilutes the signal
}

TEST_CASE("lucas embedding stays undetected at every rate") {
    const auto cover = testutil::natural_cover(11, 256, 256);
    const std::uint64_t usable = capacity(cover) - kHeaderBits;
    for (int pct : {10, 50, 100}) {
        const std::size_t bytes = usable * pct / 100 / 8;
        const auto message = testutil::random_bytes(12 + pct, bytes);
        const auto stego = embed(cover, message, EmbedOptions{}).stego;
        for (const auto& point : chi_square_curve(stego, 10).points) {
            CHECK(point.index < 0.1);
        }
    }
}

TEST_CASE("steps 1 equals the single full-prefix point") {
    const auto cover = testutil::natural_cover(13, 64, 64);
    const auto report = chi_square_curve(cover, 1);
    REQUIRE(report.points.size() == 1);
    const auto point = chi_square_index(cover, 1.0);
    CHECK(report.points[0].chi2 == point.chi2);
    CHECK(report.points[0].index == point.index);
}

TEST_CASE("color images report the most suspicious channel") {
    auto rgb = testutil::random_image(14, 64, 64, 3);
    // balance channel 2 pairs exactly; channels 0/1 stay random
    for (std::size_t p = 0; p < rgb.pixel_count(); ++p) {
        rgb.samples[p * 3 + 2] = std::uint8_t(p % 8);
    }
    const auto point = chi_square_index(rgb, 1.0);
    CHECK(point.index == 1.0);
}

TEST_CASE("degenerate inputs raise insufficient data") {
    ImageBuffer tiny = make_image(1, 1, 1);
    tiny.samples[0] = 3;
    CHECK_THROWS_AS(chi_square_index(tiny, 1.0), InsufficientDataError);
    CHECK_THROWS_AS(chi_square_index(tiny, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_index(tiny, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_curve(tiny, 0), std::invalid_argument);
}
