#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hamming {

// Fixed-length sequence of bits with 1-indexed positions: position 1 is the
// first (leftmost) bit. Codewords have length n, data blocks length m.
class BitBlock {
  public:
    BitBlock() = default;
    explicit BitBlock(std::size_t length) : bits_(length, 0) {}

    // Parses a string of '0'/'1' characters; the first character becomes
    // position 1. Any other character is rejected.
    static BitBlock from_string(std::string_view text);

    std::size_t length() const { return bits_.size(); }

    int bit(std::size_t position) const;
    void set_bit(std::size_t position, int value);
    void flip_bit(std::size_t position);

    std::size_t count_ones() const;

    std::string to_string() const;

    // Bitwise sum over GF(2); both blocks must have the same length.
    BitBlock operator^(const BitBlock& other) const;

    bool operator==(const BitBlock& other) const = default;

  private:
    void check_position(std::size_t position) const;

    std::vector<std::uint8_t> bits_;
};

// Number of ones in the block modulo 2.
int overall_parity(const BitBlock& block);

}  // namespace hamming
