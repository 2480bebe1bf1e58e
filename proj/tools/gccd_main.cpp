#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gccd/channel.hpp"
#include "gccd/codec.hpp"
#include "gccd/counting.hpp"
#include "gccd/scheme.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("failed writing " + path);
}

// Numeric inputs denote a value; the declared bit length fixes the leading
// zeros, which the value alone cannot.
gccd::BitString bits_from_hex(std::string hex, std::size_t bit_len) {
    if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
    if (hex.empty()) throw std::runtime_error("empty hex literal");
    std::vector<int> nibble_bits;
    nibble_bits.reserve(hex.size() * 4);
    for (char ch : hex) {
        int nibble;
        if (ch >= '0' && ch <= '9') nibble = ch - '0';
        else if (ch >= 'a' && ch <= 'f') nibble = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') nibble = ch - 'A' + 10;
        else throw std::runtime_error(std::string("invalid hex digit '") + ch + "'");
        for (int shift = 3; shift >= 0; --shift) nibble_bits.push_back((nibble >> shift) & 1);
    }
    std::size_t first_one = 0;
    while (first_one < nibble_bits.size() && nibble_bits[first_one] == 0) ++first_one;
    const std::size_t significant = nibble_bits.size() - first_one;
    if (significant > bit_len) {
        throw std::runtime_error("hex value needs " + std::to_string(significant) +
                                 " bits, but --bits-len declares " + std::to_string(bit_len));
    }
    gccd::BitString out;
    for (std::size_t i = 0; i < bit_len - significant; ++i) out.append(0);
    for (std::size_t i = first_one; i < nibble_bits.size(); ++i) out.append(nibble_bits[i]);
    return out;
}

gccd::BitString bits_from_dec(const std::string& dec, std::size_t bit_len) {
    if (dec.empty() || dec.find_first_not_of("0123456789") != std::string::npos) {
        throw std::runtime_error("invalid decimal literal '" + dec + "'");
    }
    std::uint64_t value = 0;
    for (char ch : dec) {
        const std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
        if (value > (UINT64_MAX - digit) / 10) {
            throw std::runtime_error("decimal payloads are limited to 64-bit values; "
                                     "use --bits or --hex for longer payloads");
        }
        value = value * 10 + digit;
    }
    return gccd::BitString::from_unsigned(value, bit_len);
}

std::vector<std::size_t> parse_position_list(const std::string& text) {
    std::vector<std::size_t> positions;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw std::runtime_error("invalid position '" + token + "' in --flip list");
        }
        positions.push_back(std::stoull(token));
    }
    if (positions.empty()) throw std::runtime_error("--flip needs at least one position");
    return positions;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) {
        throw std::runtime_error("--m-range expects the form A..B");
    }
    const std::string a = text.substr(0, sep);
    const std::string b = text.substr(sep + 2);
    if (a.empty() || b.empty() || a.find_first_not_of("0123456789") != std::string::npos ||
        b.find_first_not_of("0123456789") != std::string::npos) {
        throw std::runtime_error("--m-range expects the form A..B with integers");
    }
    return {std::stoi(a), std::stoi(b)};
}

gccd::PartitionSpec parse_partition(const std::string& text) {
    gccd::PartitionSpec p;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw std::runtime_error("invalid part '" + token + "' in --partition");
        }
        p.parts.push_back(std::stoi(token));
    }
    if (!p.valid()) {
        throw std::runtime_error("--partition needs positive non-increasing parts");
    }
    return p;
}

std::vector<std::size_t> changed_positions(const gccd::BitString& before,
                                           const gccd::BitString& after) {
    std::vector<std::size_t> changed;
    for (std::size_t pos = 0; pos < before.size(); ++pos) {
        if (before.bit(pos) != after.bit(pos)) changed.push_back(pos);
    }
    return changed;
}

struct OverheadRow {
    int m;
    std::size_t payload_bits;
    int check_symbols;
    std::string ratio;
};

OverheadRow overhead_row(int m) {
    return {m, gccd::triangle_size(m), m, gccd::overhead_ratio(m).repr()};
}

void print_overhead_table(const std::vector<OverheadRow>& rows, const std::string& format) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            arr.push_back(ordered_json{{"m", row.m},
                                       {"payload_bits", row.payload_bits},
                                       {"check_symbols", row.check_symbols},
                                       {"ratio", row.ratio}});
        }
        std::cout << arr.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "m,payload_bits,check_symbols,ratio\n";
        for (const auto& row : rows) {
            std::cout << row.m << ',' << row.payload_bits << ',' << row.check_symbols << ','
                      << row.ratio << '\n';
        }
    } else {
        std::cout << "  m  payload_bits  check_symbols  ratio\n";
        for (const auto& row : rows) {
            std::printf("%3d  %12zu  %13d  %s\n", row.m, row.payload_bits, row.check_symbols,
                        row.ratio.c_str());
        }
    }
}

void print_report_text(const gccd::ExperimentReport& r) {
    std::cout << "trials              " << r.trials << '\n'
              << "malformed           " << r.detected_by_stage.malformed << '\n'
              << "improper_coloring   " << r.detected_by_stage.improper_coloring << '\n'
              << "chromatic_drop      " << r.detected_by_stage.chromatic_drop << '\n'
              << "undetected          " << r.undetected << '\n'
              << "accepted_identity   " << r.accepted_identity << '\n'
              << "p_hat               " << nlohmann::json(r.p_hat).dump() << '\n'
              << "stderr              " << nlohmann::json(r.stderr_binomial).dump() << '\n'
              << "p1_exact            " << r.p1_exact.repr() << '\n'
              << "bound_2_to_minus_y  " << r.bound_2_to_minus_y.repr() << '\n'
              << "detection_exponent  " << r.detection_exponent << '\n'
              << "model_mismatch      " << (r.model_mismatch ? "true" : "false") << '\n';
}

struct EncodeArgs {
    std::string bits, hex, dec, out;
    std::size_t bits_len = 0;
    bool bits_len_given = false;
    std::string mode = "zero";
    int pin_size = 0;
    int max_order = gccd::kDefaultOrderGuard;
};

int run_encode(const EncodeArgs& a) {
    gccd::BitString payload;
    if (!a.bits.empty()) {
        if (a.bits_len_given) {
            throw std::runtime_error("--bits-len is only meaningful with --hex or --dec");
        }
        payload = gccd::BitString::from_string(a.bits);
    } else if (!a.hex.empty()) {
        if (!a.bits_len_given) throw std::runtime_error("--hex requires --bits-len");
        payload = bits_from_hex(a.hex, a.bits_len);
    } else {
        if (!a.bits_len_given) throw std::runtime_error("--dec requires --bits-len");
        payload = bits_from_dec(a.dec, a.bits_len);
    }
    const auto mode = a.mode == "pin" ? gccd::PaddingMode::clique_pin : gccd::PaddingMode::zero_fill;
    const gccd::CheckedMessage message = gccd::encode(payload, mode, a.pin_size, a.max_order);
    write_file(a.out, gccd::serialize_message(message));
    ordered_json summary{{"out", a.out},
                         {"payload_bits", message.payload.size()},
                         {"mode", a.mode},
                         {"pin_size", message.plan.pin_size},
                         {"order", message.plan.total_order},
                         {"chromatic", message.chromatic}};
    std::cout << summary.dump() << '\n';
    return 0;
}

int run_verify(const std::string& in, int max_order) {
    gccd::CheckedMessage message;
    try {
        const auto bytes = read_file(in);
        message = gccd::parse_message(bytes);
    } catch (const gccd::WireFormatError& e) {
        ordered_json verdict{{"verdict", "malformed"},
                            {"error", gccd::wire_error_name(e.code())},
                            {"detail", e.what()}};
        std::cout << verdict.dump() << '\n';
        return 2;
    }
    const gccd::VerificationOutcome outcome = gccd::verify(message, max_order);
    if (outcome.accepted) {
        std::cout << ordered_json{{"verdict", "accepted"}}.dump() << '\n';
        return 0;
    }
    if (*outcome.stage == gccd::DetectionStage::malformed) {
        std::cout << ordered_json{{"verdict", "malformed"}}.dump() << '\n';
        return 2;
    }
    ordered_json verdict{{"verdict", "error_detected"},
                        {"stage", gccd::stage_name(*outcome.stage)}};
    std::cout << verdict.dump() << '\n';
    return 1;
}

struct CorruptArgs {
    std::string in, out, flip;
    std::size_t random_count = 0;
    bool random_given = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int run_corrupt(const CorruptArgs& a) {
    const auto bytes = read_file(a.in);
    gccd::CheckedMessage message = gccd::parse_message(bytes);
    gccd::ChannelModel model;
    if (!a.flip.empty()) {
        if (a.seed_given) throw std::runtime_error("--seed is only meaningful with --random");
        model = gccd::FlipPositions{parse_position_list(a.flip)};
    } else {
        if (!a.seed_given) throw std::runtime_error("--random requires --seed");
        model = gccd::FlipRandom{a.random_count, a.seed};
    }
    const gccd::BitString before = message.payload;
    message.payload = gccd::corrupt(before, model);
    write_file(a.out, gccd::serialize_message(message));
    ordered_json summary{{"out", a.out},
                         {"changed_positions", changed_positions(before, message.payload)}};
    std::cout << summary.dump() << '\n';
    return 0;
}

struct AnalyzeArgs {
    int m = 0;
    bool m_given = false;
    int n = 0;
    bool n_given = false;
    std::string m_range, partition, format = "text";
};

int run_analyze(const AnalyzeArgs& a) {
    if (!a.partition.empty()) {
        const gccd::PartitionSpec p = parse_partition(a.partition);
        if (a.m_given && a.m != p.total()) {
            throw std::runtime_error("--m disagrees with the partition total");
        }
        if (a.n_given && a.n != p.part_count()) {
            throw std::runtime_error("--n disagrees with the partition part count");
        }
        const std::uint64_t exp = gccd::cross_pair_exponent(p);
        const auto count = gccd::partition_graph_count(p);
        if (a.format == "json") {
            ordered_json j{{"m", p.total()},
                           {"n", p.part_count()},
                           {"partition", p.parts},
                           {"gamma_partition_exp", exp},
                           {"gamma_partition", count.decimal()}};
            std::cout << j.dump() << '\n';
        } else if (a.format == "csv") {
            std::cout << "m,n,partition,gamma_partition_exp,gamma_partition\n";
            std::string parts;
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
                parts += (i ? "+" : "") + std::to_string(p.parts[i]);
            }
            std::cout << p.total() << ',' << p.part_count() << ',' << parts << ',' << exp << ','
                      << count.decimal() << '\n';
        } else {
            std::cout << "m                   " << p.total() << '\n'
                      << "n                   " << p.part_count() << '\n'
                      << "gamma_partition_exp " << exp << '\n'
                      << "gamma_partition     " << count.decimal() << '\n';
        }
        return 0;
    }
    if (a.n_given) {
        if (!a.m_given) throw std::runtime_error("--n requires --m");
        const auto total = gccd::total_graph_count(a.m);
        const auto best = gccd::max_partition_count(a.m, a.n);
        const auto bound = gccd::undetected_probability_bound(a.m, a.n);
        const auto overhead = gccd::overhead_ratio(a.m);
        if (a.format == "json") {
            ordered_json j{{"gamma_total_exp", total.exponent},
                           {"gamma_max_exp", best.count.exponent},
                           {"y", a.m - a.n},
                           {"p1", bound.exact.repr()},
                           {"overhead", overhead.repr()}};
            std::cout << j.dump() << '\n';
        } else if (a.format == "csv") {
            std::cout << "gamma_total_exp,gamma_max_exp,y,p1,overhead\n"
                      << total.exponent << ',' << best.count.exponent << ',' << (a.m - a.n) << ','
                      << bound.exact.repr() << ',' << overhead.repr() << '\n';
        } else {
            std::cout << "gamma_total_exp  " << total.exponent << '\n'
                      << "gamma_max_exp    " << best.count.exponent << '\n'
                      << "y                " << (a.m - a.n) << '\n'
                      << "p1               " << bound.exact.repr() << '\n'
                      << "overhead         " << overhead.repr() << '\n';
        }
        return 0;
    }
    std::vector<OverheadRow> rows;
    if (!a.m_range.empty()) {
        const auto [lo, hi] = parse_range(a.m_range);
        if (lo < 2 || hi < lo) throw std::runtime_error("--m-range needs 2 <= A <= B");
        for (int m = lo; m <= hi; ++m) rows.push_back(overhead_row(m));
    } else if (a.m_given) {
        rows.push_back(overhead_row(a.m));
    } else {
        throw std::runtime_error("analyze needs one of --m, --m-range, --partition");
    }
    print_overhead_table(rows, a.format);
    return 0;
}

struct OracleArgs {
    int m = 0;
    std::string partition, format = "text";
};

int run_oracle(const OracleArgs& a) {
    if (!a.partition.empty()) {
        const gccd::PartitionSpec p = parse_partition(a.partition);
        if (p.total() != a.m) throw std::runtime_error("--m disagrees with the partition total");
        const std::uint64_t enumerated = gccd::partition_count_by_enumeration(a.m, p);
        const auto predicted = gccd::partition_graph_count(p);
        const bool match = enumerated == (std::uint64_t{1} << predicted.exponent);
        if (a.format == "json") {
            ordered_json j{{"m", a.m},
                           {"partition", p.parts},
                           {"enumerated", enumerated},
                           {"gamma_partition", predicted.decimal()},
                           {"match", match}};
            std::cout << j.dump() << '\n';
        } else if (a.format == "csv") {
            std::cout << "m,partition,enumerated,gamma_partition,match\n";
            std::string parts;
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
                parts += (i ? "+" : "") + std::to_string(p.parts[i]);
            }
            std::cout << a.m << ',' << parts << ',' << enumerated << ',' << predicted.decimal()
                      << ',' << (match ? "true" : "false") << '\n';
        } else {
            std::cout << "m               " << a.m << '\n'
                      << "enumerated      " << enumerated << '\n'
                      << "gamma_partition " << predicted.decimal() << '\n'
                      << "match           " << (match ? "true" : "false") << '\n';
        }
        return match ? 0 : 1;
    }
    const gccd::ChromaticSpectrum spectrum = gccd::chromatic_spectrum(a.m);
    if (a.format == "json") {
        ordered_json j{{"m", a.m}, {"counts", spectrum.counts}, {"total", spectrum.total()}};
        std::cout << j.dump() << '\n';
    } else if (a.format == "csv") {
        std::cout << "chromatic,count\n";
        for (std::size_t i = 0; i < spectrum.counts.size(); ++i) {
            std::cout << (i + 1) << ',' << spectrum.counts[i] << '\n';
        }
    } else {
        std::cout << "chromatic  count\n";
        for (std::size_t i = 0; i < spectrum.counts.size(); ++i) {
            std::printf("%9zu  %llu\n", i + 1,
                        static_cast<unsigned long long>(spectrum.counts[i]));
        }
        std::cout << "total      " << spectrum.total() << '\n';
    }
    return 0;
}

struct SimulateArgs {
    std::string in, flip, format = "json";
    std::uint64_t trials = 0;
    std::size_t random_count = 0;
    bool random_given = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int max_order = gccd::kDefaultOrderGuard;
};

int run_simulate(const SimulateArgs& a) {
    const auto bytes = read_file(a.in);
    const gccd::CheckedMessage message = gccd::parse_message(bytes);
    gccd::ChannelModel model;
    if (!a.flip.empty()) {
        if (a.random_given) throw std::runtime_error("--flip and --random are exclusive");
        if (a.seed_given) throw std::runtime_error("--seed is only meaningful for random models");
        model = gccd::FlipPositions{parse_position_list(a.flip)};
    } else if (a.random_given) {
        if (!a.seed_given) throw std::runtime_error("--random requires --seed");
        model = gccd::FlipRandom{a.random_count, a.seed};
    } else {
        if (!a.seed_given) throw std::runtime_error("the replacement model requires --seed");
        model = gccd::UniformReplacement{a.seed};
    }
    const gccd::ExperimentReport report =
        gccd::run_monte_carlo(message, model, a.trials, a.max_order);
    if (a.format == "json") {
        std::cout << report.to_json() << '\n';
    } else if (a.format == "csv") {
        std::cout << gccd::ExperimentReport::csv_header() << '\n'
                  << report.to_csv_row() << '\n';
    } else {
        print_report_text(report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-coloring check digits: encode, verify, corrupt, analyze, oracle, simulate"};
    app.require_subcommand(1);

    EncodeArgs enc;
    auto* encode_cmd = app.add_subcommand("encode", "build a checked message from a payload");
    auto* source = encode_cmd->add_option_group("payload source");
    source->add_option("--bits", enc.bits, "payload as a 0/1 literal");
    source->add_option("--hex", enc.hex, "payload as a hex value (needs --bits-len)");
    source->add_option("--dec", enc.dec, "payload as a decimal value (needs --bits-len)");
    source->require_option(1);
    encode_cmd->add_option("--bits-len", enc.bits_len, "declared payload length in bits")
        ->check(CLI::PositiveNumber);
    encode_cmd->add_option("--mode", enc.mode, "padding mode (default zero)")
        ->check(CLI::IsMember({"zero", "pin"}));
    encode_cmd->add_option("--pin-size", enc.pin_size, "pinned block size for pin mode");
    encode_cmd->add_option("--out", enc.out, "output wire file")->required();
    encode_cmd->add_option("--max-order", enc.max_order, "solver order guard (default 24)");

    std::string verify_in;
    int verify_max_order = gccd::kDefaultOrderGuard;
    auto* verify_cmd = app.add_subcommand("verify", "check a received wire file");
    verify_cmd->add_option("--in", verify_in, "input wire file")->required();
    verify_cmd->add_option("--max-order", verify_max_order, "solver order guard (default 24)");

    CorruptArgs cor;
    auto* corrupt_cmd = app.add_subcommand("corrupt", "flip payload bits of a wire file");
    corrupt_cmd->add_option("--in", cor.in, "input wire file")->required();
    corrupt_cmd->add_option("--out", cor.out, "output wire file")->required();
    auto* flip_opt = corrupt_cmd->add_option("--flip", cor.flip, "positions to flip, comma-separated");
    auto* random_opt =
        corrupt_cmd->add_option("--random", cor.random_count, "flip this many random positions");
    flip_opt->excludes(random_opt);
    corrupt_cmd->add_option("--seed", cor.seed, "seed for --random");

    AnalyzeArgs ana;
    auto* analyze_cmd = app.add_subcommand("analyze", "counting bounds and overhead tables");
    analyze_cmd->add_option("--m", ana.m, "vertex count");
    analyze_cmd->add_option("--n", ana.n, "color count");
    analyze_cmd->add_option("--m-range", ana.m_range, "overhead table rows A..B");
    analyze_cmd->add_option("--partition", ana.partition, "class sizes x1,x2,...");
    analyze_cmd->add_option("--format", ana.format, "json|csv|text (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    OracleArgs ora;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force census checks");
    oracle_cmd->add_option("--m", ora.m, "vertex count")->required();
    oracle_cmd->add_option("--partition", ora.partition, "class sizes x1,x2,...");
    oracle_cmd->add_option("--format", ora.format, "json|csv|text (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo detection experiment");
    simulate_cmd->add_option("--in", sim.in, "input wire file")->required();
    simulate_cmd->add_option("--trials", sim.trials, "number of trials")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--flip", sim.flip, "fixed positions to flip each trial");
    simulate_cmd->add_option("--random", sim.random_count, "flip this many random positions per trial");
    simulate_cmd->add_option("--seed", sim.seed, "master seed for random models");
    simulate_cmd->add_option("--max-order", sim.max_order, "solver order guard (default 24)");
    simulate_cmd->add_option("--format", sim.format, "json|csv|text (default json)")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        enc.bits_len_given = encode_cmd->count("--bits-len") > 0;
        cor.random_given = corrupt_cmd->count("--random") > 0;
        cor.seed_given = corrupt_cmd->count("--seed") > 0;
        ana.m_given = analyze_cmd->count("--m") > 0;
        ana.n_given = analyze_cmd->count("--n") > 0;
        sim.random_given = simulate_cmd->count("--random") > 0;
        sim.seed_given = simulate_cmd->count("--seed") > 0;

        if (encode_cmd->parsed()) return run_encode(enc);
        if (verify_cmd->parsed()) return run_verify(verify_in, verify_max_order);
        if (corrupt_cmd->parsed()) {
            if (cor.flip.empty() && !cor.random_given) {
                throw std::runtime_error("corrupt needs --flip or --random");
            }
            return run_corrupt(cor);
        }
        if (analyze_cmd->parsed()) return run_analyze(ana);
        if (oracle_cmd->parsed()) return run_oracle(ora);
        if (simulate_cmd->parsed()) return run_simulate(sim);
        throw std::runtime_error("no subcommand selected");
    } catch (const gccd::WireFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
