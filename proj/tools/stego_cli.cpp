// Command line front end: embed / extract / inspect / metrics / analyze /
// bench / solve-table.  Exit codes: 0 ok, 1 usage, 2 format, 3 capacity,
// 4 corrupt stego.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stego/algorithm.hpp"
#include "stego/bench.hpp"
#include "stego/chi_square.hpp"
#include "stego/errors.hpp"
#include "stego/lucas.hpp"
#include "stego/metrics.hpp"
#include "stego/syndrome.hpp"

namespace {

using namespace stego;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitCorrupt = 4;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
}

Traversal parse_traversal(const std::string& name) {
    if (name == "sequential") return Traversal::sequential;
    if (name == "permuted") return Traversal::permuted;
    throw std::invalid_argument("bad traversal '" + name +
                                "' (want sequential or permuted)");
}

struct CommonFlags {
    std::string algo = "lucas";
    std::uint64_t seed = 0;
    std::string traversal = "sequential";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--algo", flags.algo, "Algorithm: lucas, lsb, lsbm, lsbmr");
    cmd->add_option("--seed", flags.seed, "Seed for traversal and randomness");
    cmd->add_option("--traversal", flags.traversal, "sequential or permuted");
}

int cmd_embed(const std::string& cover_path, const std::string& message_path,
              const std::string& out_path, const CommonFlags& flags) {
    const Algorithm algo = parse_algorithm(flags.algo);
    const Traversal traversal = parse_traversal(flags.traversal);
    const ImageBuffer cover = load_pnm(cover_path);
    const auto message = read_file(message_path);
    const AlgoResult result = algo_embed(algo, cover, message, flags.seed, traversal);
    save_pnm(out_path, result.stego);

    const QualityReport quality =
        quality_report(cover, result.stego, result.log, result.embedded_bits);
    nlohmann::json sidecar;
    sidecar["algorithm"] = flags.algo;
    sidecar["seed"] = flags.seed;
    sidecar["traversal"] = flags.traversal;
    sidecar["payload_bits"] = 8 * message.size();
    sidecar["embedded_bits"] = result.embedded_bits;
    sidecar["changed_samples"] = quality.changed_samples;
    sidecar["psnr_db"] = std::isinf(quality.psnr_db) ? 1e9 : quality.psnr_db;
    std::ofstream side(out_path + ".json", std::ios::trunc);
    side << sidecar.dump(2) << '\n';
    return kExitOk;
}

int cmd_extract(const std::string& stego_path, const std::string& out_path,
                const CommonFlags& flags) {
    const Algorithm algo = parse_algorithm(flags.algo);
    const Traversal traversal = parse_traversal(flags.traversal);
    const ImageBuffer stego = load_pnm(stego_path);
    // Fully extract before touching the output path, so a failure
    // leaves nothing behind.
    const auto message = algo_extract(algo, stego, flags.seed, traversal);
    write_file(out_path, message);
    return kExitOk;
}

int cmd_inspect_value(int value) {
    if (value < 0 || value > 255) {
        throw std::out_of_range("inspect: value must be in 0..255");
    }
    const LucasBits bits = decompose(value);
    const SevenBits seven = low7(bits);
    const Syndrome s = syndrome_of(seven);
    std::string seven_str(7, '0');
    for (int i = 1; i <= 7; ++i) {
        if ((seven >> (i - 1)) & 1u) seven_str[7 - i] = '1';
    }
    std::cout << "value " << value << "\n"
              << "lucas " << bits.to_string() << "\n"
              << "low7  " << seven_str << "\n"
              << "syndrome " << s.to_string() << "\n";
    return kExitOk;
}

int cmd_inspect_image(const std::string& path) {
    const ImageBuffer image = load_pnm(path);
    std::cout << "image " << path << "\n"
              << "size " << image.cols << "x" << image.rows << " channels "
              << image.channels << "\n"
              << "capacity_bits " << capacity(image) << "\n"
              << "usable_bits " << usable_bits(Algorithm::lucas, image) << "\n";
    for (int ch = 0; ch < image.channels; ++ch) {
        const auto h = histogram(image, ch);
        std::uint64_t lo = 0, hi = 0;
        double sum = 0.0;
        for (int v = 0; v < 256; ++v) {
            sum += double(v) * double(h[v]);
            if (v < 128) lo += h[v]; else hi += h[v];
        }
        std::cout << "channel " << ch << " mean "
                  << sum / double(image.pixel_count()) << " low_half " << lo
                  << " high_half " << hi << "\n";
    }
    return kExitOk;
}

int cmd_metrics(const std::string& cover_path, const std::string& stego_path) {
    const ImageBuffer cover = load_pnm(cover_path);
    const ImageBuffer stego = load_pnm(stego_path);
    const double m = mse(cover, stego);
    const double p = psnr(m);
    std::uint64_t changed = 0;
    for (std::size_t i = 0; i < cover.samples.size(); ++i) {
        if (cover.samples[i] != stego.samples[i]) ++changed;
    }
    std::cout << "mse " << m << "\n";
    if (std::isinf(p)) std::cout << "psnr_db inf\n";
    else std::cout << "psnr_db " << p << "\n";
    std::cout << "changed_samples " << changed << "\n"
              << "total_samples " << cover.sample_count() << "\n"
              << "rate_per_sample " << double(changed) / double(cover.sample_count())
              << "\n";
    return kExitOk;
}

int cmd_analyze(const std::string& image_path, int steps,
                const std::string& out_path) {
    const ImageBuffer image = load_pnm(image_path);
    const ChiSquareReport report = chi_square_curve(image, steps);
    std::ostringstream csv;
    csv << "fraction,chi2,dof,index\n";
    for (const auto& p : report.points) {
        char line[128];
        std::snprintf(line, sizeof line, "%.8g,%.8g,%d,%.8g\n", p.prefix_fraction,
                      p.chi2, p.dof, p.index);
        csv << line;
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << csv.str();
    }
    return kExitOk;
}

int cmd_bench(const std::string& config_path) {
    const BenchConfig config = load_bench_config(config_path);
    const auto rows = run_bench(config);
    std::size_t failed = 0;
    for (const auto& r : rows) {
        if (!r.ok) ++failed;
    }
    std::cout << "bench: " << rows.size() << " cells, " << failed
              << " failed, output in " << config.out_dir << "\n";
    return kExitOk;
}

int cmd_solve_table(const std::string& out_path) {
    if (out_path.empty()) {
        solve_table().write_csv(std::cout);
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        solve_table().write_csv(out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lucas-representation image steganography toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;

    std::string cover_path, message_path, out_path, stego_path, image_path,
        config_path, analyze_out, table_out;
    int inspect_value = -1;
    int steps = 10;

    auto* embed_cmd = app.add_subcommand("embed", "Embed a message into a PNM cover");
    embed_cmd->add_option("--cover", cover_path, "Cover image (PGM/PPM)")->required();
    embed_cmd->add_option("--message", message_path, "Message file (raw bytes)")
        ->required();
    embed_cmd->add_option("--out", out_path, "Stego image output path")->required();
    add_common(embed_cmd, flags);

    auto* extract_cmd = app.add_subcommand("extract", "Recover a message");
    extract_cmd->add_option("--stego", stego_path, "Stego image")->required();
    extract_cmd->add_option("--out", out_path, "Recovered message path")->required();
    add_common(extract_cmd, flags);

    auto* inspect_cmd = app.add_subcommand("inspect", "Print Lucas decompositions");
    auto* value_opt = inspect_cmd->add_option("--value", inspect_value,
                                              "Sample value 0..255");
    auto* image_opt = inspect_cmd->add_option("--image", image_path, "PNM image");
    value_opt->excludes(image_opt);

    auto* metrics_cmd = app.add_subcommand("metrics", "Compare two images");
    metrics_cmd->add_option("--cover", cover_path, "Cover image")->required();
    metrics_cmd->add_option("--stego", stego_path, "Stego image")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Chi-square prefix curve");
    analyze_cmd->add_option("--image", image_path, "Image to analyze")->required();
    analyze_cmd->add_option("--steps", steps, "Number of prefix fractions");
    analyze_cmd->add_option("--out", analyze_out, "CSV output path (default stdout)");

    auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark matrix");
    bench_cmd->add_option("--config", config_path, "JSON config file")->required();

    auto* table_cmd = app.add_subcommand("solve-table", "Dump the 256x8 solve table");
    table_cmd->add_option("--out", table_out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(embed_cmd)) {
            return cmd_embed(cover_path, message_path, out_path, flags);
        }
        if (app.got_subcommand(extract_cmd)) {
            return cmd_extract(stego_path, out_path, flags);
        }
        if (app.got_subcommand(inspect_cmd)) {
            if (value_opt->count() > 0) return cmd_inspect_value(inspect_value);
            if (image_opt->count() > 0) return cmd_inspect_image(image_path);
            std::cerr << "inspect: need --value or --image\n";
            return kExitUsage;
        }
        if (app.got_subcommand(metrics_cmd)) {
            return cmd_metrics(cover_path, stego_path);
        }
        if (app.got_subcommand(analyze_cmd)) {
            return cmd_analyze(image_path, steps, analyze_out);
        }
        if (app.got_subcommand(bench_cmd)) {
            return cmd_bench(config_path);
        }
        if (app.got_subcommand(table_cmd)) {
            return cmd_solve_table(table_out);
        }
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const CorruptStegoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCorrupt;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
