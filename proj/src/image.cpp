#include "stego/image.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "stego/errors.hpp"

namespace stego {
namespace {

// Header token reader: skips whitespace and '#' comments (comment runs
// to end of line), then reads one token.
class HeaderScanner {
public:
    explicit HeaderScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::string next_token(const char* field) {
        skip_separators();
        if (pos_ >= bytes_.size()) {
            throw FormatError(std::string("pnm: missing ") + field);
        }
        std::string token;
        while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
            token += char(bytes_[pos_++]);
        }
        if (token.empty()) {
            throw FormatError(std::string("pnm: missing ") + field);
        }
        return token;
    }

    int next_int(const char* field, int min, int max) {
        const std::string token = next_token(field);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception&) {
            throw FormatError(std::string("pnm: bad ") + field + " '" + token + "'");
        }
        if (used != token.size() || value < min || value > max) {
            throw FormatError(std::string("pnm: bad ") + field + " '" + token + "'");
        }
        return int(value);
    }

    // The netpbm convention: exactly one whitespace byte separates the
    // maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw FormatError("pnm: missing whitespace before raster");
        }
        return pos_ + 1;
    }

private:
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

ImageBuffer make_image(int rows, int cols, int channels) {
    if (rows < 1 || cols < 1) {
        throw FormatError("image: dimensions must be positive");
    }
    if (channels != 1 && channels != 3) {
        throw FormatError("image: channels must be 1 or 3");
    }
    ImageBuffer image;
    image.rows = rows;
    image.cols = cols;
    image.channels = channels;
    image.samples.assign(std::size_t(rows) * cols * channels, 0);
    return image;
}

ImageBuffer read_pnm(std::span<const std::uint8_t> bytes) {
    HeaderScanner scanner(bytes);
    const std::string magic = scanner.next_token("magic");
    int channels;
    if (magic == "P5") {
        channels = 1;
    } else if (magic == "P6") {
        channels = 3;
    } else {
        throw FormatError("pnm: bad magic '" + magic + "' (want P5 or P6)");
    }
    const int cols = scanner.next_int("width", 1, 1 << 20);
    const int rows = scanner.next_int("height", 1, 1 << 20);
    const int maxval = scanner.next_int("maxval", 1, std::numeric_limits<int>::max());
    if (maxval != 255) {
        throw FormatError("pnm: maxval must be 255, got " + std::to_string(maxval));
    }
    const std::size_t offset = scanner.raster_offset();
    const std::size_t expected = std::size_t(rows) * cols * channels;
    if (bytes.size() - offset < expected) {
        throw FormatError("pnm: truncated raster (have " +
                          std::to_string(bytes.size() - offset) + " bytes, need " +
                          std::to_string(expected) + ")");
    }
    if (bytes.size() - offset > expected) {
        throw FormatError("pnm: trailing data after raster");
    }
    ImageBuffer image = make_image(rows, cols, channels);
    std::copy(bytes.begin() + offset, bytes.end(), image.samples.begin());
    return image;
}

std::vector<std::uint8_t> write_pnm(const ImageBuffer& image) {
    if (image.rows < 1 || image.cols < 1 ||
        (image.channels != 1 && image.channels != 3) ||
        image.samples.size() != image.pixel_count() * image.channels) {
        throw FormatError("pnm: invalid image buffer");
    }
    const std::string header = std::string(image.channels == 1 ? "P5" : "P6") + "\n" +
                               std::to_string(image.cols) + " " +
                               std::to_string(image.rows) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.samples.begin(), image.samples.end());
    return out;
}

ImageBuffer load_pnm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("pnm: cannot open '" + path.string() + "'");
    }
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    return read_pnm(bytes);
}

void save_pnm(const std::filesystem::path& path, const ImageBuffer& image) {
    const auto bytes = write_pnm(image);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("pnm: cannot write '" + path.string() + "'");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
}

std::array<std::uint64_t, 256> histogram(const ImageBuffer& image, int channel) {
    if (channel < 0 || channel >= image.channels) {
        throw std::out_of_range("histogram: bad channel index " +
                                std::to_string(channel));
    }
    std::array<std::uint64_t, 256> counts{};
    for (std::size_t i = channel; i < image.samples.size(); i += image.channels) {
        ++counts[image.samples[i]];
    }
    return counts;
}

}  // namespace stego
