// Command-line front end: encode/decode byte streams, inject channel noise,
// analyze a code, and trace the checking-number derivation for one word.
//
// Exit status: 0 success, 1 I/O failure, 2 usage or format error,
// 3 degraded data (uncorrectable blocks seen while decoding).

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamming/analysis.hpp"
#include "hamming/channel.hpp"
#include "hamming/codec.hpp"
#include "hamming/errors.hpp"
#include "hamming/matrix.hpp"
#include "hamming/stream.hpp"

namespace {

using namespace hamming;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_all(const std::string& path) {
    if (path == "-") {
        std::vector<std::uint8_t> bytes;
        char buf[4096];
        while (true) {
            std::cin.read(buf, sizeof buf);
            const std::streamsize got = std::cin.gcount();
            bytes.insert(bytes.end(), buf, buf + got);
            if (got < static_cast<std::streamsize>(sizeof buf)) {
                break;
            }
        }
        return bytes;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open '" + path + "' for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoFailure("failed reading '" + path + "'");
    }
    return bytes;
}

void write_all(const std::string& path, std::span<const std::uint8_t> bytes) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        if (!std::cout) {
            throw IoFailure("failed writing to standard output");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoFailure("cannot open '" + path + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw IoFailure("failed writing '" + path + "'");
    }
}

CodeParams make_params(std::size_t m, std::optional<std::size_t> k) {
    return k ? CodeParams::create(m, *k) : derive_params(m);
}

std::size_t parse_count(std::string_view text, const char* what) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw InvalidParameterError(std::string(what) + " expects a nonnegative integer, got '" +
                                    std::string(text) + "'");
    }
    return value;
}

std::string binary_digits(std::uint64_t value, std::size_t width) {
    std::string text(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((value >> i) & 1u) {
            text[width - 1 - i] = '1';
        }
    }
    return text;
}

int run_encode(const std::string& input, const std::string& output, const CodeParams& params) {
    write_all(output, encode_stream(read_all(input), params));
    return 0;
}

int run_decode(const std::string& input, const std::string& output, bool full_report) {
    const DecodedStream decoded = decode_stream(read_all(input));
    write_all(output, decoded.payload);
    for (const BlockOutcome& block : decoded.report.outcomes) {
        if (block.status == DecodeStatus::Corrected) {
            std::cerr << "block " << block.block_index << ": corrected position "
                      << *block.corrected_position << '\n';
        } else if (block.status == DecodeStatus::Uncorrectable) {
            std::cerr << "block " << block.block_index << ": uncorrectable\n";
        } else if (full_report) {
            std::cerr << "block " << block.block_index << ": clean\n";
        }
    }
    std::cerr << decoded.report.block_count << " blocks, " << decoded.report.corrected
              << " corrected, " << decoded.report.uncorrectable << " uncorrectable\n";
    return decoded.report.degraded() ? 3 : 0;
}

int run_corrupt(const std::string& input, const std::string& output, const std::string& flip,
                std::optional<double> bsc, std::uint64_t seed) {
    std::vector<std::uint8_t> coded = read_all(input);
    const FrameHeader header = inspect_stream(coded);
    const CodeParams params = header.params();
    const std::size_t blocks = header.block_count();
    const auto flip_packed_bit = [&](std::size_t index) {
        coded[FrameHeader::kSize + index / 8] ^= static_cast<std::uint8_t>(0x80u >> (index % 8));
    };

    if (!flip.empty()) {
        const auto colon = flip.find(':');
        if (colon == std::string::npos) {
            throw InvalidParameterError("--flip expects BLOCK:POS");
        }
        const std::size_t block = parse_count(std::string_view(flip).substr(0, colon), "--flip BLOCK");
        const std::size_t pos = parse_count(std::string_view(flip).substr(colon + 1), "--flip POS");
        if (block >= blocks) {
            throw PositionRangeError("block " + std::to_string(block) + " outside 0.." +
                                     std::to_string(blocks == 0 ? 0 : blocks - 1));
        }
        if (pos < 1 || pos > params.n) {
            throw PositionRangeError("position " + std::to_string(pos) + " outside 1.." +
                                     std::to_string(params.n));
        }
        flip_packed_bit(block * params.n + (pos - 1));
    } else {
        if (!(*bsc >= 0.0 && *bsc <= 1.0)) {
            throw InvalidParameterError("crossover probability outside [0, 1]");
        }
        // Noise touches codeword bits only; header and final padding bits
        // stay intact.
        SplitMix64 rng(seed);
        for (std::size_t index = 0; index < blocks * params.n; ++index) {
            if (rng.next_unit() < *bsc) {
                flip_packed_bit(index);
            }
        }
    }
    write_all(output, coded);
    return 0;
}

int run_analyze(const CodeParams& params, bool force) {
    const AnalysisReport report = analyze_code(params, force);
    std::cout << report.to_text();
    const BinaryMatrix interleaved = parity_check_interleaved(params);
    const BinaryMatrix systematic = parity_check_systematic(params);
    std::cout << "parity_check_interleaved\n" << interleaved.to_text();
    std::cout << "parity_check_systematic\n" << systematic.to_text();
    const auto perm = find_column_permutation(interleaved, systematic);
    std::cout << "column_permutation";
    for (const std::size_t column : perm->mapping) {
        std::cout << ' ' << column;
    }
    std::cout << '\n';
    return 0;
}

int run_trace(const CodeParams& params, const std::string& word_text) {
    const BitBlock word = BitBlock::from_string(word_text);
    if (word.length() != params.n) {
        throw InvalidInputError("--word must have exactly n = " + std::to_string(params.n) +
                                " bits, got " + std::to_string(word.length()));
    }
    std::cout << "word " << word.to_string() << '\n';
    std::cout << "code n=" << params.n << " m=" << params.m << " k=" << params.k << '\n';

    const std::size_t decimal_width = std::to_string(params.n).size();
    const int column = static_cast<int>(std::max(params.k, decimal_width)) + 2;
    for (std::size_t i = 0; i < params.k; ++i) {
        const std::vector<std::size_t> mask = check_mask(i, params.n);
        std::cout << "group " << (i + 1) << ": check position " << (std::size_t{1} << i) << '\n';
        std::cout << "  " << std::left << std::setw(9) << "positions" << std::right;
        for (const std::size_t p : mask) {
            std::cout << std::setw(column) << p;
        }
        std::cout << '\n';
        std::cout << "  " << std::left << std::setw(9) << "binary" << std::right;
        for (const std::size_t p : mask) {
            std::cout << std::setw(column) << binary_digits(p, params.k);
        }
        std::cout << '\n';
        std::cout << "  " << std::left << std::setw(9) << "bits" << std::right;
        int sum = 0;
        for (const std::size_t p : mask) {
            std::cout << std::setw(column) << word.bit(p);
            sum ^= word.bit(p);
        }
        std::cout << '\n';
        std::cout << "  sum s" << (i + 1) << " = " << sum << '\n';
    }

    const CheckingNumber syndrome = compute_checking_number(word, params);
    if (syndrome.value == 0) {
        std::cout << "checking number 0; no error\n";
        std::cout << "data " << extract_data(word, params).to_string() << '\n';
    } else if (syndrome.value <= params.n) {
        std::cout << "checking number " << binary_digits(syndrome.value, params.k)
                  << "₂ = " << syndrome.value << "; flip position " << syndrome.value
                  << '\n';
        BitBlock repaired = word;
        repaired.flip_bit(syndrome.value);
        std::cout << "corrected word " << repaired.to_string() << '\n';
        std::cout << "data " << extract_data(repaired, params).to_string() << '\n';
    } else {
        std::cout << "checking number " << binary_digits(syndrome.value, params.k)
                  << "₂ = " << syndrome.value << "; exceeds block length " << params.n
                  << ", uncorrectable\n";
        std::cout << "data " << extract_data(word, params).to_string() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamming single-error-correcting block codes"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    std::size_t m = 0;
    std::size_t k_value = 0;
    bool full_report = false;
    bool force = false;
    std::string flip;
    std::optional<double> bsc;
    std::uint64_t seed = 0;
    std::string word;

    std::vector<CLI::Option*> k_options;
    const auto add_code_options = [&](CLI::App* cmd) {
        auto* m_opt = cmd->add_option("--m", m, "information bits per block")->required();
        k_options.push_back(
            cmd->add_option("--k", k_value, "check bits per block (default: smallest feasible)")
                ->needs(m_opt));
    };

    CLI::App* encode_cmd = app.add_subcommand("encode", "Frame and encode a byte stream");
    encode_cmd->add_option("input", input, "input path, - for stdin");
    encode_cmd->add_option("-o,--output", output, "output path, - for stdout");
    add_code_options(encode_cmd);

    CLI::App* decode_cmd = app.add_subcommand("decode", "Decode a coded stream");
    decode_cmd->add_option("input", input, "input path, - for stdin");
    decode_cmd->add_option("-o,--output", output, "output path, - for stdout");
    decode_cmd->add_flag("--report", full_report, "report every block, not just repaired ones");

    CLI::App* corrupt_cmd = app.add_subcommand("corrupt", "Inject bit errors into a coded stream");
    corrupt_cmd->add_option("input", input, "input path, - for stdin");
    corrupt_cmd->add_option("-o,--output", output, "output path, - for stdout");
    auto* flip_opt =
        corrupt_cmd->add_option("--flip", flip, "flip bit POS (1-indexed) of block BLOCK, as BLOCK:POS");
    auto* bsc_opt = corrupt_cmd->add_option(
        "--bsc", bsc, "flip every codeword bit independently with this probability");
    corrupt_cmd->add_option("--seed", seed, "seed for --bsc noise");
    flip_opt->excludes(bsc_opt);
    bsc_opt->excludes(flip_opt);

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Brute-force figures and matrices");
    add_code_options(analyze_cmd);
    analyze_cmd->add_flag("--force", force, "run past the desk-scale guards");

    CLI::App* trace_cmd = app.add_subcommand("trace", "Derive the checking number of one word");
    add_code_options(trace_cmd);
    trace_cmd->add_option("--word", word, "received word as a bit string")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto explicit_k = [&]() -> std::optional<std::size_t> {
            for (const CLI::Option* opt : k_options) {
                if (opt->count() > 0) {
                    return k_value;
                }
            }
            return std::nullopt;
        };
        if (encode_cmd->parsed()) {
            return run_encode(input, output, make_params(m, explicit_k()));
        }
        if (decode_cmd->parsed()) {
            return run_decode(input, output, full_report);
        }
        if (corrupt_cmd->parsed()) {
            if (flip_opt->count() + bsc_opt->count() != 1) {
                throw InvalidParameterError("corrupt needs exactly one of --flip or --bsc");
            }
            return run_corrupt(input, output, flip, bsc, seed);
        }
        if (analyze_cmd->parsed()) {
            return run_analyze(make_params(m, explicit_k()), force);
        }
        if (trace_cmd->parsed()) {
            return run_trace(make_params(m, explicit_k()), word);
        }
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
