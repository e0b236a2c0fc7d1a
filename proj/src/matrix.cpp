#include "hamming/matrix.hpp"

#include <map>
#include <string>

#include "hamming/codec.hpp"
#include "hamming/errors.hpp"

namespace hamming {

int BinaryMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) {
        throw PositionRangeError("matrix index (" + std::to_string(row) + ", " +
                                 std::to_string(col) + ") outside " + std::to_string(rows_) +
                                 "x" + std::to_string(cols_));
    }
    return entries_[row * cols_ + col];
}

void BinaryMatrix::set(std::size_t row, std::size_t col, int value) {
    if (row >= rows_ || col >= cols_) {
        throw PositionRangeError("matrix index (" + std::to_string(row) + ", " +
                                 std::to_string(col) + ") outside " + std::to_string(rows_) +
                                 "x" + std::to_string(cols_));
    }
    entries_[row * cols_ + col] = value ? 1 : 0;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix result(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            result.entries_[c * rows_ + r] = entries_[r * cols_ + c];
        }
    }
    return result;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix& other) const {
    if (cols_ != other.rows_) {
        throw InvalidInputError("matrix product needs " + std::to_string(cols_) +
                                " rows on the right, got " + std::to_string(other.rows_));
    }
    BinaryMatrix result(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < other.cols_; ++c) {
            std::uint8_t sum = 0;
            for (std::size_t t = 0; t < cols_; ++t) {
                sum ^= entries_[r * cols_ + t] & other.entries_[t * other.cols_ + c];
            }
            result.entries_[r * other.cols_ + c] = sum;
        }
    }
    return result;
}

bool BinaryMatrix::is_zero() const {
    for (const std::uint8_t e : entries_) {
        if (e) {
            return false;
        }
    }
    return true;
}

std::string BinaryMatrix::to_text() const {
    std::string text;
    text.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            text.push_back(static_cast<char>('0' + entries_[r * cols_ + c]));
        }
        text.push_back('\n');
    }
    return text;
}

BinaryMatrix apply_column_permutation(const BinaryMatrix& matrix, const ColumnPermutation& perm) {
    if (perm.mapping.size() != matrix.cols()) {
        throw InvalidInputError("permutation length " + std::to_string(perm.mapping.size()) +
                                " does not match " + std::to_string(matrix.cols()) + " columns");
    }
    std::vector<bool> seen(matrix.cols(), false);
    for (const std::size_t source : perm.mapping) {
        if (source < 1 || source > matrix.cols() || seen[source - 1]) {
            throw InvalidInputError("column permutation is not a bijection on 1.." +
                                    std::to_string(matrix.cols()));
        }
        seen[source - 1] = true;
    }
    BinaryMatrix result(matrix.rows(), matrix.cols());
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
        const std::size_t source = perm.mapping[c] - 1;
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            result.set(r, c, matrix.at(r, source));
        }
    }
    return result;
}

BinaryMatrix parity_check_interleaved(const CodeParams& params) {
    BinaryMatrix h(params.k, params.n);
    for (std::size_t i = 0; i < params.k; ++i) {
        for (std::size_t p = 1; p <= params.n; ++p) {
            if ((p >> i) & 1u) {
                h.set(i, p - 1, 1);
            }
        }
    }
    return h;
}

BinaryMatrix generator_matrix(const CodeParams& params) {
    BinaryMatrix g(params.m, params.n);
    BitBlock unit(params.m);
    for (std::size_t j = 1; j <= params.m; ++j) {
        unit.set_bit(j, 1);
        const BitBlock row = encode(unit, params);
        unit.set_bit(j, 0);
        for (std::size_t p = 1; p <= params.n; ++p) {
            g.set(j - 1, p - 1, row.bit(p));
        }
    }
    return g;
}

BinaryMatrix parity_check_systematic(const CodeParams& params) {
    ColumnPermutation to_systematic;
    to_systematic.mapping = data_positions(params);
    for (std::size_t i = 0; i < params.k; ++i) {
        to_systematic.mapping.push_back(std::size_t{1} << i);
    }
    return apply_column_permutation(parity_check_interleaved(params), to_systematic);
}

std::optional<ColumnPermutation> find_column_permutation(const BinaryMatrix& h1,
                                                         const BinaryMatrix& h2) {
    if (h1.rows() != h2.rows() || h1.cols() != h2.cols()) {
        throw InvalidInputError("column permutation needs matrices of equal dimensions");
    }
    // Identical columns are interchangeable, so handing out the smallest
    // unused source index per content class is both valid and deterministic.
    std::map<std::vector<std::uint8_t>, std::vector<std::size_t>> pool;
    for (std::size_t c = 0; c < h1.cols(); ++c) {
        std::vector<std::uint8_t> column(h1.rows());
        for (std::size_t r = 0; r < h1.rows(); ++r) {
            column[r] = static_cast<std::uint8_t>(h1.at(r, c));
        }
        pool[column].push_back(c + 1);
    }
    ColumnPermutation perm;
    perm.mapping.reserve(h2.cols());
    for (std::size_t c = 0; c < h2.cols(); ++c) {
        std::vector<std::uint8_t> column(h2.rows());
        for (std::size_t r = 0; r < h2.rows(); ++r) {
            column[r] = static_cast<std::uint8_t>(h2.at(r, c));
        }
        const auto entry = pool.find(column);
        if (entry == pool.end() || entry->second.empty()) {
            return std::nullopt;
        }
        perm.mapping.push_back(entry->second.front());
        entry->second.erase(entry->second.begin());
    }
    return perm;
}

std::uint64_t syndrome_from_matrix(const BinaryMatrix& parity_check, const BitBlock& word) {
    if (word.length() != parity_check.cols()) {
        throw InvalidInputError("word length " + std::to_string(word.length()) +
                                " does not match " + std::to_string(parity_check.cols()) +
                                " matrix columns");
    }
    if (parity_check.rows() > 63) {
        throw InvalidInputError("syndrome register supports at most 63 rows");
    }
    std::uint64_t value = 0;
    for (std::size_t r = 0; r < parity_check.rows(); ++r) {
        std::uint64_t sum = 0;
        for (std::size_t c = 0; c < parity_check.cols(); ++c) {
            sum ^= static_cast<std::uint64_t>(parity_check.at(r, c) & word.bit(c + 1));
        }
        value |= sum << r;
    }
    return value;
}

}  // namespace hamming
