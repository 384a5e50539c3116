#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stego/algorithm.hpp"
#include "stego/image.hpp"

namespace stego {

enum class RateMode { per_capacity, absolute_bits };

struct BenchConfig {
    std::vector<std::string> corpus;
    std::vector<Algorithm> algorithms;
    std::vector<double> rates;  // ascending, each in (0, 1]
    RateMode rate_mode = RateMode::per_capacity;
    std::uint64_t absolute_bits = 0;  // payload size in absolute-bits mode
    std::uint64_t seed = 0;
    std::string out_dir;
    int curve_steps = 10;
};

/// Throws std::invalid_argument on an inconsistent config.
void validate(const BenchConfig& config);

BenchConfig load_bench_config(const std::filesystem::path& path);

struct BenchRow {
    std::string image;
    Algorithm algo = Algorithm::lucas;
    double rate = 0.0;
    bool ok = false;
    std::string error;
    std::uint64_t payload_bits = 0;
    double mse = 0.0;
    double psnr_db = 0.0;
    double rate_per_sample = 0.0;
    double rate_per_bit = 0.0;
    double chi2_index_full = 0.0;
    double wall_time_ms = 0.0;
};

/// Run the full algorithm x rate x image matrix and write bench.csv,
/// summary.csv, flags.csv, timing.csv, curves/, hist/ and a config echo
/// under config.out_dir.  Everything except timing.csv is a pure
/// function of the config.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// One CSV per channel: value, cover_count, stego_count.
void export_histograms(const ImageBuffer& cover, const ImageBuffer& stego,
                       const std::string& stem,
                       const std::filesystem::path& out_dir);

}  // namespace stego
