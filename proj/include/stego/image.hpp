#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace stego {

// R x C x L grid of 8-bit samples, row-major, channel-interleaved.
struct ImageBuffer {
    int rows = 0;
    int cols = 0;
    int channels = 1;  // 1 (grayscale) or 3 (RGB)
    std::vector<std::uint8_t> samples;

    std::size_t sample_count() const { return samples.size(); }
    std::size_t pixel_count() const { return std::size_t(rows) * std::size_t(cols); }

    std::uint8_t at(int r, int c, int ch = 0) const {
        return samples[(std::size_t(r) * cols + c) * channels + ch];
    }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;
};

/// Zero-filled image; throws FormatError on bad dimensions or channels.
ImageBuffer make_image(int rows, int cols, int channels);

/// Parse binary PGM ("P5") or PPM ("P6") with maxval 255.  '#' comments
/// are allowed anywhere in the header.  Throws FormatError naming the
/// offending field.
ImageBuffer read_pnm(std::span<const std::uint8_t> bytes);

/// Canonical serialization: "P5\n{C} {R}\n255\n" (or "P6") + raw raster.
std::vector<std::uint8_t> write_pnm(const ImageBuffer& image);

ImageBuffer load_pnm(const std::filesystem::path& path);
void save_pnm(const std::filesystem::path& path, const ImageBuffer& image);

/// Per-value counts for one channel; counts sum to rows*cols.
std::array<std::uint64_t, 256> histogram(const ImageBuffer& image, int channel);

}  // namespace stego
