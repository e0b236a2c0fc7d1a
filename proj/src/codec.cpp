#include "hamming/codec.hpp"

#include <bit>
#include <string>

#include "hamming/errors.hpp"

namespace hamming {

namespace {

void check_length(const BitBlock& block, std::size_t expected, const char* what) {
    if (block.length() != expected) {
        throw InvalidInputError(std::string(what) + " must have length " +
                                std::to_string(expected) + ", got " +
                                std::to_string(block.length()));
    }
}

}  // namespace

BitBlock encode(const BitBlock& data, const CodeParams& params) {
    check_length(data, params.m, "data block");
    BitBlock word(params.n);
    std::size_t j = 1;
    for (std::size_t p = 1; p <= params.n; ++p) {
        if (!std::has_single_bit(p)) {
            word.set_bit(p, data.bit(j));
            ++j;
        }
    }
    // Each check bit equals the parity of the other members of its group, so
    // the full group sum comes out zero.
    for (std::size_t i = 0; i < params.k; ++i) {
        int sum = 0;
        for (std::size_t p = 1; p <= params.n; ++p) {
            if ((p >> i) & 1u) {
                sum ^= word.bit(p);
            }
        }
        word.set_bit(std::size_t{1} << i, sum);
    }
    return word;
}

CheckingNumber compute_checking_number(const BitBlock& received, const CodeParams& params) {
    check_length(received, params.n, "received word");
    CheckingNumber result;
    for (std::size_t i = 0; i < params.k; ++i) {
        int sum = 0;
        for (std::size_t p = 1; p <= params.n; ++p) {
            if ((p >> i) & 1u) {
                sum ^= received.bit(p);
            }
        }
        result.value |= static_cast<std::uint64_t>(sum) << i;
    }
    return result;
}

DecodeOutcome decode(const BitBlock& received, const CodeParams& params) {
    const CheckingNumber syndrome = compute_checking_number(received, params);
    if (syndrome.value == 0) {
        return DecodeOutcome{extract_data(received, params), std::nullopt, DecodeStatus::Clean};
    }
    if (syndrome.value <= params.n) {
        BitBlock repaired = received;
        repaired.flip_bit(syndrome.value);
        return DecodeOutcome{extract_data(repaired, params), syndrome.value,
                             DecodeStatus::Corrected};
    }
    // Only reachable for shortened codes (or multi-bit corruption): the
    // checking number names a position past the end of the block.
    return DecodeOutcome{extract_data(received, params), std::nullopt,
                         DecodeStatus::Uncorrectable};
}

BitBlock extract_data(const BitBlock& codeword, const CodeParams& params) {
    check_length(codeword, params.n, "codeword");
    BitBlock data(params.m);
    std::size_t j = 1;
    for (std::size_t p = 1; p <= params.n; ++p) {
        if (!std::has_single_bit(p)) {
            data.set_bit(j, codeword.bit(p));
            ++j;
        }
    }
    return data;
}

}  // namespace hamming
