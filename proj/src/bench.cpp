#include "stego/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "stego/chi_square.hpp"
#include "stego/errors.hpp"
#include "stego/metrics.hpp"
#include "stego/traversal.hpp"

namespace stego {
namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::uint64_t cell_seed(const BenchConfig& config, std::size_t image_idx,
                        std::size_t algo_idx, std::size_t rate_idx) {
    SplitMix64 mix(config.seed ^ (0x100000001B3ULL *
                                  (image_idx * 1315423911ULL +
                                   algo_idx * 2654435761ULL + rate_idx + 1)));
    return mix.next();
}

std::vector<std::uint8_t> random_payload(std::uint64_t seed, std::uint64_t bytes) {
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> payload(bytes);
    for (std::size_t i = 0; i < payload.size(); i += 8) {
        const std::uint64_t word = rng.next();
        for (std::size_t j = 0; j < 8 && i + j < payload.size(); ++j) {
            payload[i + j] = std::uint8_t(word >> (8 * j));
        }
    }
    return payload;
}

void write_curve_csv(const std::filesystem::path& path,
                     const ChiSquareReport& report) {
    std::ofstream out(path, std::ios::trunc);
    out << "fraction,chi2,dof,index\n";
    for (const auto& p : report.points) {
        out << fmt(p.prefix_fraction) << ',' << fmt(p.chi2) << ',' << p.dof << ','
            << fmt(p.index) << '\n';
    }
}

json config_to_json(const BenchConfig& config) {
    json j;
    j["corpus"] = config.corpus;
    std::vector<std::string> names;
    for (Algorithm a : config.algorithms) names.push_back(algorithm_name(a));
    j["algorithms"] = names;
    j["rates"] = config.rates;
    j["rate_mode"] = config.rate_mode == RateMode::per_capacity ? "per-capacity"
                                                                : "absolute-bits";
    j["absolute_bits"] = config.absolute_bits;
    j["seed"] = config.seed;
    j["out_dir"] = config.out_dir;
    j["curve_steps"] = config.curve_steps;
    return j;
}

}  // namespace

void validate(const BenchConfig& config) {
    if (config.corpus.empty()) {
        throw std::invalid_argument("bench config: corpus must not be empty");
    }
    if (config.algorithms.empty()) {
        throw std::invalid_argument("bench config: algorithms must not be empty");
    }
    if (config.rates.empty()) {
        throw std::invalid_argument("bench config: rates must not be empty");
    }
    for (double r : config.rates) {
        if (!(r > 0.0) || r > 1.0) {
            throw std::invalid_argument("bench config: rates must lie in (0, 1]");
        }
    }
    if (!std::is_sorted(config.rates.begin(), config.rates.end())) {
        throw std::invalid_argument("bench config: rates must be sorted ascending");
    }
    if (config.rate_mode == RateMode::absolute_bits && config.absolute_bits == 0) {
        throw std::invalid_argument(
            "bench config: absolute-bits mode needs absolute_bits > 0");
    }
    if (config.out_dir.empty()) {
        throw std::invalid_argument("bench config: out_dir must be set");
    }
    if (config.curve_steps < 1) {
        throw std::invalid_argument("bench config: curve_steps must be at least 1");
    }
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("bench config: cannot open '" + path.string() + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bench config: bad JSON: ") + e.what());
    }
    BenchConfig config;
    try {
        config.corpus = j.at("corpus").get<std::vector<std::string>>();
        for (const auto& name : j.at("algorithms").get<std::vector<std::string>>()) {
            config.algorithms.push_back(parse_algorithm(name));
        }
        config.rates = j.at("rates").get<std::vector<double>>();
        const std::string mode = j.value("rate_mode", "per-capacity");
        if (mode == "per-capacity") {
            config.rate_mode = RateMode::per_capacity;
        } else if (mode == "absolute-bits") {
            config.rate_mode = RateMode::absolute_bits;
        } else {
            throw std::invalid_argument("bench config: bad rate_mode '" + mode + "'");
        }
        config.absolute_bits = j.value("absolute_bits", std::uint64_t(0));
        config.seed = j.value("seed", std::uint64_t(0));
        config.out_dir = j.at("out_dir").get<std::string>();
        config.curve_steps = j.value("curve_steps", 10);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bench config: ") + e.what());
    }
    validate(config);
    return config;
}

void export_histograms(const ImageBuffer& cover, const ImageBuffer& stego,
                       const std::string& stem,
                       const std::filesystem::path& out_dir) {
    if (cover.rows != stego.rows || cover.cols != stego.cols ||
        cover.channels != stego.channels) {
        throw FormatError("export_histograms: image shapes differ");
    }
    std::filesystem::create_directories(out_dir);
    for (int ch = 0; ch < cover.channels; ++ch) {
        const auto hc = histogram(cover, ch);
        const auto hs = histogram(stego, ch);
        std::ofstream out(out_dir / (stem + "_" + std::to_string(ch) + ".csv"),
                          std::ios::trunc);
        out << "value,cover_count,stego_count\n";
        for (int v = 0; v < 256; ++v) {
            out << v << ',' << hc[v] << ',' << hs[v] << '\n';
        }
    }
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    validate(config);
    const std::filesystem::path out_dir(config.out_dir);
    std::filesystem::create_directories(out_dir / "curves");
    std::filesystem::create_directories(out_dir / "hist");
    {
        std::ofstream echo(out_dir / "config.json", std::ios::trunc);
        echo << config_to_json(config).dump(2) << '\n';
    }

    std::vector<BenchRow> rows;
    for (std::size_t ii = 0; ii < config.corpus.size(); ++ii) {
        const std::string& path = config.corpus[ii];
        ImageBuffer cover;
        bool cover_ok = true;
        std::string cover_error;
        try {
            cover = load_pnm(path);
        } catch (const std::exception& e) {
            cover_ok = false;
            cover_error = e.what();
        }

        for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
            const Algorithm algo = config.algorithms[ai];
            for (std::size_t ri = 0; ri < config.rates.size(); ++ri) {
                const double rate = config.rates[ri];
                BenchRow row;
                row.image = path;
                row.algo = algo;
                row.rate = rate;
                if (!cover_ok) {
                    row.error = cover_error;
                    rows.push_back(row);
                    continue;
                }
                const auto start = std::chrono::steady_clock::now();
                try {
                    const std::uint64_t usable = usable_bits(algo, cover);
                    const std::uint64_t target_bits =
                        config.rate_mode == RateMode::per_capacity
                            ? std::uint64_t(rate * double(usable))
                            : std::min(config.absolute_bits, usable);
                    const std::uint64_t bytes = target_bits / 8;
                    if (bytes == 0) {
                        throw CapacityError("bench: payload rounds to zero bytes");
                    }
                    const std::uint64_t seed = cell_seed(config, ii, ai, ri);
                    const auto payload = random_payload(seed, bytes);
                    const AlgoResult result = algo_embed(algo, cover, payload, seed,
                                                         Traversal::permuted);
                    const QualityReport quality = quality_report(
                        cover, result.stego, result.log, result.embedded_bits);
                    row.ok = true;
                    row.payload_bits = 8 * bytes;
                    row.mse = quality.mse;
                    row.psnr_db = quality.psnr_db;
                    row.rate_per_sample = quality.rate_per_sample;
                    row.rate_per_bit = quality.rate_per_bit;
                    row.chi2_index_full = chi_square_index(result.stego, 1.0).index;

                    const auto curve = chi_square_curve(result.stego, config.curve_steps);
                    char pct[16];
                    std::snprintf(pct, sizeof pct, "%03d", int(rate * 100.0 + 0.5));
                    write_curve_csv(out_dir / "curves" /
                                        (stem_of(path) + "__" + algorithm_name(algo) +
                                         "__" + pct + ".csv"),
                                    curve);
                    if (algo == Algorithm::lucas && ri + 1 == config.rates.size()) {
                        export_histograms(cover, result.stego, stem_of(path),
                                          out_dir / "hist");
                    }
                } catch (const std::exception& e) {
                    row.ok = false;
                    row.error = e.what();
                }
                const auto stop = std::chrono::steady_clock::now();
                row.wall_time_ms =
                    std::chrono::duration<double, std::milli>(stop - start).count();
                rows.push_back(row);
            }
        }
    }

    // bench.csv carries everything deterministic; timings go separately.
    {
        std::ofstream out(out_dir / "bench.csv", std::ios::trunc);
        out << "image,algorithm,rate,ok,payload_bits,mse,psnr_db,rate_per_sample,"
               "rate_per_bit,chi2_index_full,error\n";
        for (const auto& r : rows) {
            out << r.image << ',' << algorithm_name(r.algo) << ',' << fmt(r.rate)
                << ',' << (r.ok ? 1 : 0) << ',' << r.payload_bits << ','
                << fmt(r.mse) << ',' << fmt(r.psnr_db) << ','
                << fmt(r.rate_per_sample) << ',' << fmt(r.rate_per_bit) << ','
                << fmt(r.chi2_index_full) << ",\"" << r.error << "\"\n";
        }
    }
    {
        std::ofstream out(out_dir / "timing.csv", std::ios::trunc);
        out << "image,algorithm,rate,wall_time_ms\n";
        for (const auto& r : rows) {
            out << r.image << ',' << algorithm_name(r.algo) << ',' << fmt(r.rate)
                << ',' << fmt(r.wall_time_ms) << '\n';
        }
    }

    // Per (rate, algorithm) averages, ordered like the comparison table.
    std::map<std::pair<double, std::string>, std::pair<std::vector<double>,
                                                       std::vector<double>>> cells;
    for (const auto& r : rows) {
        if (!r.ok) continue;
        auto& cell = cells[{r.rate, algorithm_name(r.algo)}];
        cell.first.push_back(r.psnr_db);
        cell.second.push_back(r.rate_per_sample);
    }
    auto mean = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return v.empty() ? 0.0 : s / double(v.size());
    };
    {
        std::ofstream out(out_dir / "summary.csv", std::ios::trunc);
        out << "rate,algorithm,avg_psnr_db,avg_rate_per_sample,images\n";
        for (const auto& [key, cell] : cells) {
            out << fmt(key.first) << ',' << key.second << ',' << fmt(mean(cell.first))
                << ',' << fmt(mean(cell.second)) << ',' << cell.first.size() << '\n';
        }
    }
    {
        std::ofstream out(out_dir / "flags.csv", std::ios::trunc);
        out << "algorithm,psnr_nonincreasing_in_rate\n";
        for (Algorithm algo : config.algorithms) {
            const std::string name = algorithm_name(algo);
            bool monotone = true;
            double previous = std::numeric_limits<double>::infinity();
            for (double rate : config.rates) {
                auto it = cells.find({rate, name});
                if (it == cells.end()) continue;
                const double avg = mean(it->second.first);
                if (avg > previous) monotone = false;
                previous = avg;
            }
            out << name << ',' << (monotone ? 1 : 0) << '\n';
        }
    }
    return rows;
}

}  // namespace stego
