#include "hamming/bit_block.hpp"

#include <algorithm>
#include <numeric>

#include "hamming/errors.hpp"

namespace hamming {

BitBlock BitBlock::from_string(std::string_view text) {
    BitBlock block(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw InvalidInputError("bit string may contain only '0' and '1'");
        }
        block.bits_[i] = static_cast<std::uint8_t>(c - '0');
    }
    return block;
}

void BitBlock::check_position(std::size_t position) const {
    if (position < 1 || position > bits_.size()) {
        throw PositionRangeError("bit position " + std::to_string(position) +
                                 " outside 1.." + std::to_string(bits_.size()));
    }
}

int BitBlock::bit(std::size_t position) const {
    check_position(position);
    return bits_[position - 1];
}

void BitBlock::set_bit(std::size_t position, int value) {
    check_position(position);
    bits_[position - 1] = value ? 1 : 0;
}

void BitBlock::flip_bit(std::size_t position) {
    check_position(position);
    bits_[position - 1] ^= 1;
}

std::size_t BitBlock::count_ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitBlock::to_string() const {
    std::string text(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        text[i] = static_cast<char>('0' + bits_[i]);
    }
    return text;
}

BitBlock BitBlock::operator^(const BitBlock& other) const {
    if (bits_.size() != other.bits_.size()) {
        throw InvalidInputError("bitwise sum needs blocks of equal length");
    }
    BitBlock result(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        result.bits_[i] = bits_[i] ^ other.bits_[i];
    }
    return result;
}

int overall_parity(const BitBlock& block) {
    return static_cast<int>(block.count_ones() % 2);
}

}  // namespace hamming
