#include "hamming/code_params.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "hamming/errors.hpp"

namespace hamming {

namespace {

// Syndrome values live in a k-bit register; anything past 63 bits is far
// outside desk scale and would overflow the shifts below.
constexpr std::size_t kMaxCheckBits = 63;

}  // namespace

CodeParams CodeParams::create(std::size_t m, std::size_t k) {
    if (m < 1) {
        throw InvalidParameterError("a code needs at least one information bit");
    }
    if (k < 2) {
        throw InvalidParameterError("a code needs at least two check bits");
    }
    if (k > kMaxCheckBits) {
        throw InvalidParameterError("check bit count " + std::to_string(k) + " out of range");
    }
    const std::size_t n = m + k;
    if (((std::uint64_t{1} << k) - 1) < n) {
        throw InvalidParameterError("2^k - 1 = " +
                                    std::to_string((std::uint64_t{1} << k) - 1) +
                                    " cannot address all " + std::to_string(n) +
                                    " single-error positions");
    }
    return CodeParams{m, k, n};
}

bool CodeParams::is_perfect() const {
    return n == (std::uint64_t{1} << k) - 1;
}

CodeParams derive_params(std::size_t m) {
    if (m < 1) {
        throw InvalidParameterError("a code needs at least one information bit");
    }
    for (std::size_t k = 2; k <= kMaxCheckBits; ++k) {
        if (((std::uint64_t{1} << k) - 1) >= m + k) {
            return CodeParams{m, k, m + k};
        }
    }
    throw InvalidParameterError("no feasible check bit count for m = " + std::to_string(m));
}

PositionClass classify_position(std::size_t position, const CodeParams& params) {
    if (position < 1 || position > params.n) {
        throw PositionRangeError("position " + std::to_string(position) + " outside 1.." +
                                 std::to_string(params.n));
    }
    if (std::has_single_bit(position)) {
        return PositionClass{PositionClass::Kind::Check,
                             static_cast<std::size_t>(std::countr_zero(position))};
    }
    // Data index = rank among non-powers of two; bit_width(p) counts the
    // powers of two below p when p itself is not one.
    return PositionClass{PositionClass::Kind::Data, position - 1 - std::bit_width(position)};
}

std::vector<std::size_t> check_mask(std::size_t group, std::size_t block_length) {
    if ((std::uint64_t{1} << group) > block_length || group > kMaxCheckBits) {
        throw InvalidParameterError("check group " + std::to_string(group) +
                                    " has no positions in a block of length " +
                                    std::to_string(block_length));
    }
    std::vector<std::size_t> members;
    for (std::size_t p = 1; p <= block_length; ++p) {
        if ((p >> group) & 1u) {
            members.push_back(p);
        }
    }
    return members;
}

std::vector<std::size_t> data_positions(const CodeParams& params) {
    std::vector<std::size_t> positions;
    positions.reserve(params.m);
    for (std::size_t p = 1; p <= params.n; ++p) {
        if (!std::has_single_bit(p)) {
            positions.push_back(p);
        }
    }
    return positions;
}

}  // namespace hamming
