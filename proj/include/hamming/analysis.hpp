#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "hamming/code_params.hpp"

namespace hamming {

// Brute-force guards keeping enumeration runs under a minute at desk scale.
// Every guarded routine accepts force = true to run anyway.
inline constexpr std::size_t kEnumerationGuardM = 20;  // 2^m codewords
inline constexpr std::size_t kCorrectionGuardM = 16;   // 2^m x n decode cases

// Minimum Hamming weight over all nonzero codewords. Equals the minimum
// distance because the code is linear (covered by the linearity tests).
std::size_t min_distance_bruteforce(const CodeParams& params, bool force = false);

// Codeword count per Hamming weight; counts sum to 2^m.
std::map<std::size_t, std::size_t> weight_distribution(const CodeParams& params,
                                                       bool force = false);

// Fraction of (data block, flip position) pairs that decode back to the
// original data with the true position reported. 1.0 for every valid code.
double exhaustive_correction_check(const CodeParams& params, bool force = false);

// Monte-Carlo estimate of the probability that decoding a block sent over
// BSC(crossover) fails to return the transmitted data. Reproducible for a
// fixed seed.
double block_error_rate_sim(const CodeParams& params, double crossover, std::size_t trials,
                            std::uint64_t seed);

// Code figures gathered by the brute-force routines above.
struct AnalysisReport {
    CodeParams params;
    std::size_t min_distance = 0;
    std::map<std::size_t, std::size_t> weights;
    double correction_coverage = 0.0;

    double rate() const { return params.rate(); }

    // Flat key-value lines, one figure per line.
    std::string to_text() const;
};

AnalysisReport analyze_code(const CodeParams& params, bool force = false);

}  // namespace hamming
