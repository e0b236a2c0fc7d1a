#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hamming/bit_block.hpp"
#include "hamming/code_params.hpp"

namespace hamming {

// The k parity sums of a word read as a binary number, s_1 least
// significant. Zero on a valid codeword; for a single corrupted bit it is
// exactly the 1-indexed position of that bit.
struct CheckingNumber {
    std::uint64_t value = 0;

    // s_i for i in 1..k: the parity sum of check group i-1.
    int bit(std::size_t i) const { return static_cast<int>((value >> (i - 1)) & 1u); }

    bool operator==(const CheckingNumber&) const = default;
};

enum class DecodeStatus { Clean, Corrected, Uncorrectable };

// Full decoder verdict. Uncorrectable means the checking number exceeded the
// block length, which is reachable only for shortened codes or multi-bit
// corruption; data then holds the best-effort extraction without correction.
struct DecodeOutcome {
    BitBlock data;
    std::optional<std::size_t> corrected_position;
    DecodeStatus status = DecodeStatus::Clean;
};

// Places the data bits at the data positions in increasing order and fixes
// each check bit x_{2^i} so that the parity sum over its group is zero.
BitBlock encode(const BitBlock& data, const CodeParams& params);

// Evaluates the k parity sums of a received word and assembles them bit by
// bit from right to left (s_1 is the least significant bit).
CheckingNumber compute_checking_number(const BitBlock& received, const CodeParams& params);

// Corrects at most one bit: checking number 0 passes the word through,
// 1..n flips that position, anything larger is reported uncorrectable.
DecodeOutcome decode(const BitBlock& received, const CodeParams& params);

// Reads the bits at the data positions in increasing order.
BitBlock extract_data(const BitBlock& codeword, const CodeParams& params);

}  // namespace hamming
