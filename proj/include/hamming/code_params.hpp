#pragma once

#include <cstddef>
#include <vector>

namespace hamming {

// Block code parameters: m information bits plus k check bits form a block
// of n = m + k bits. Valid whenever 2^k - 1 >= n, so the k-bit checking
// number can address every single-error position as well as "no error".
// Shortened codes (n < 2^k - 1) are first-class.
struct CodeParams {
    std::size_t m = 0;  // information bits per block
    std::size_t k = 0;  // check bits per block
    std::size_t n = 0;  // block length, m + k

    // Validated construction from an explicit (m, k) pair.
    static CodeParams create(std::size_t m, std::size_t k);

    // Fraction of transmitted bits carrying information.
    double rate() const { return static_cast<double>(m) / static_cast<double>(n); }

    // True when n = 2^k - 1 and every checking-number value is reachable.
    bool is_perfect() const;

    bool operator==(const CodeParams&) const = default;
};

// Parameters with the smallest k satisfying 2^k - 1 >= m + k. Callers
// wanting a longer shortened code use CodeParams::create directly.
CodeParams derive_params(std::size_t m);

// A block position is either the check bit of one parity group or the j-th
// information bit. Check(i) corresponds exactly to position 2^i; data
// indices enumerate the remaining positions in increasing order.
struct PositionClass {
    enum class Kind { Check, Data };

    Kind kind = Kind::Check;
    std::size_t index = 0;  // Check: group index 0..k-1; Data: data index 1..m

    bool is_check() const { return kind == Kind::Check; }
    bool is_data() const { return kind == Kind::Data; }

    bool operator==(const PositionClass&) const = default;
};

PositionClass classify_position(std::size_t position, const CodeParams& params);

// Members of parity group `group`: every position in 1..block_length whose
// binary representation has bit `group` set. The check position 2^group is
// always the smallest member. Masks truncate at block_length, which is what
// makes shortened codes work.
std::vector<std::size_t> check_mask(std::size_t group, std::size_t block_length);

// The m data positions (non-powers of two up to n) in increasing order.
std::vector<std::size_t> data_positions(const CodeParams& params);

}  // namespace hamming
