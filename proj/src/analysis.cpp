#include "hamming/analysis.hpp"

#include <cstdio>
#include <limits>
#include <string>

#include "hamming/channel.hpp"
#include "hamming/codec.hpp"
#include "hamming/errors.hpp"

namespace hamming {

namespace {

void check_guard(const CodeParams& params, std::size_t guard, bool force, const char* what) {
    if (params.m > guard && !force) {
        throw ResourceLimitError(std::string(what) + " guarded at m <= " +
                                 std::to_string(guard) + " (got m = " +
                                 std::to_string(params.m) + "); pass force to override");
    }
}

// Writes the low m bits of value into the data block, bit j of value at
// data index j+1. The enumeration order is irrelevant; it only has to cover
// all 2^m blocks once.
void fill_data(BitBlock& data, const CodeParams& params, std::uint64_t value) {
    for (std::size_t j = 0; j < params.m; ++j) {
        data.set_bit(j + 1, static_cast<int>((value >> j) & 1u));
    }
}

}  // namespace

std::size_t min_distance_bruteforce(const CodeParams& params, bool force) {
    check_guard(params, kEnumerationGuardM, force, "minimum-distance enumeration");
    const std::uint64_t total = std::uint64_t{1} << params.m;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    BitBlock data(params.m);
    for (std::uint64_t v = 1; v < total; ++v) {
        fill_data(data, params, v);
        const std::size_t weight = encode(data, params).count_ones();
        if (weight < best) {
            best = weight;
        }
    }
    return best;
}

std::map<std::size_t, std::size_t> weight_distribution(const CodeParams& params, bool force) {
    check_guard(params, kEnumerationGuardM, force, "weight-distribution enumeration");
    const std::uint64_t total = std::uint64_t{1} << params.m;
    std::map<std::size_t, std::size_t> counts;
    BitBlock data(params.m);
    for (std::uint64_t v = 0; v < total; ++v) {
        fill_data(data, params, v);
        ++counts[encode(data, params).count_ones()];
    }
    return counts;
}

double exhaustive_correction_check(const CodeParams& params, bool force) {
    check_guard(params, kCorrectionGuardM, force, "exhaustive correction check");
    const std::uint64_t total = std::uint64_t{1} << params.m;
    std::uint64_t cases = 0;
    std::uint64_t good = 0;
    BitBlock data(params.m);
    for (std::uint64_t v = 0; v < total; ++v) {
        fill_data(data, params, v);
        const BitBlock codeword = encode(data, params);
        for (std::size_t p = 1; p <= params.n; ++p) {
            BitBlock received = codeword;
            received.flip_bit(p);
            const DecodeOutcome outcome = decode(received, params);
            ++cases;
            if (outcome.status == DecodeStatus::Corrected && outcome.corrected_position == p &&
                outcome.data == data) {
                ++good;
            }
        }
    }
    return static_cast<double>(good) / static_cast<double>(cases);
}

double block_error_rate_sim(const CodeParams& params, double crossover, std::size_t trials,
                            std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidParameterError("simulation needs at least one trial");
    }
    const ChannelConfig noise{BscNoise{crossover}, seed};
    SplitMix64 rng(seed);
    std::size_t failures = 0;
    BitBlock data(params.m);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::uint64_t word = 0;
        std::size_t available = 0;
        for (std::size_t j = 1; j <= params.m; ++j) {
            if (available == 0) {
                word = rng.next();
                available = 64;
            }
            data.set_bit(j, static_cast<int>(word & 1u));
            word >>= 1;
            --available;
        }
        const BitBlock sent = encode(data, params);
        const InjectResult hit = inject(sent, noise, rng);
        if (decode(hit.corrupted, params).data != data) {
            ++failures;
        }
    }
    return static_cast<double>(failures) / static_cast<double>(trials);
}

std::string AnalysisReport::to_text() const {
    std::string text;
    char line[128];
    std::snprintf(line, sizeof line, "code (%zu,%zu)\n", params.n, params.m);
    text += line;
    std::snprintf(line, sizeof line, "n %zu\nm %zu\nk %zu\n", params.n, params.m, params.k);
    text += line;
    std::snprintf(line, sizeof line, "rate %zu/%zu = %.6f\n", params.m, params.n, rate());
    text += line;
    std::snprintf(line, sizeof line, "min_distance %zu\n", min_distance);
    text += line;
    text += "weight_distribution";
    for (const auto& [weight, count] : weights) {
        std::snprintf(line, sizeof line, " %zu:%zu", weight, count);
        text += line;
    }
    text += '\n';
    std::snprintf(line, sizeof line, "correction_coverage %.6f\n", correction_coverage);
    text += line;
    return text;
}

AnalysisReport analyze_code(const CodeParams& params, bool force) {
    check_guard(params, kEnumerationGuardM, force, "minimum-distance enumeration");
    check_guard(params, kCorrectionGuardM, force, "exhaustive correction check");
    AnalysisReport report;
    report.params = params;
    report.min_distance = min_distance_bruteforce(params, force);
    report.weights = weight_distribution(params, force);
    report.correction_coverage = exhaustive_correction_check(params, force);
    return report;
}

}  // namespace hamming
