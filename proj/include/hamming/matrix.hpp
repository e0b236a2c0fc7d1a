#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamming/bit_block.hpp"
#include "hamming/code_params.hpp"

namespace hamming {

// Dense matrix over GF(2). Rows and columns are 0-indexed here; only block
// positions use the 1-indexed convention.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, int value);

    BinaryMatrix transposed() const;
    BinaryMatrix operator*(const BinaryMatrix& other) const;  // product over GF(2)
    bool is_zero() const;

    // Plain-text grid: one line of '0'/'1' characters per row.
    std::string to_text() const;

    bool operator==(const BinaryMatrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> entries_;  // row-major
};

// Column reordering: mapping[j] is the 1-indexed source column that lands in
// target slot j+1. Always a bijection on 1..cols.
struct ColumnPermutation {
    std::vector<std::size_t> mapping;

    bool operator==(const ColumnPermutation&) const = default;
};

BinaryMatrix apply_column_permutation(const BinaryMatrix& matrix, const ColumnPermutation& perm);

// k x n parity-check matrix in check-bit-interleaved form: row i carries the
// membership mask of parity group i, so column p reads as the k-bit binary
// representation of p (row 0 the least significant bit).
BinaryMatrix parity_check_interleaved(const CodeParams& params);

// m x n generator matrix: row j is the codeword of the j-th unit data block.
BinaryMatrix generator_matrix(const CodeParams& params);

// Textbook [A | I_k] presentation: data columns first in their original
// relative order, check columns 2^0..2^{k-1} moved to the trailing k slots
// where they form an identity block.
BinaryMatrix parity_check_systematic(const CodeParams& params);

// Permutation carrying h1 onto h2 column for column, or nullopt when the
// columns of h2 are not a rearrangement of the columns of h1. Unique when
// the columns are pairwise distinct; with repeated columns the smallest
// available source index is assigned first.
std::optional<ColumnPermutation> find_column_permutation(const BinaryMatrix& h1,
                                                         const BinaryMatrix& h2);

// H . word^T read as a binary number, row i contributing bit i. This is the
// matrix route to the checking number.
std::uint64_t syndrome_from_matrix(const BinaryMatrix& parity_check, const BitBlock& word);

}  // namespace hamming
