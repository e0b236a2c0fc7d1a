#pragma once

#include <stdexcept>

namespace hamming {

// Code parameters violate the construction condition (or a guard argument
// such as a crossover probability is out of its domain).
struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A 1-indexed position falls outside 1..n.
struct PositionRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A block or word has the wrong length (or shape) for the requested code.
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A brute-force enumeration would exceed its desk-scale guard.
struct ResourceLimitError : std::length_error {
    using std::length_error::length_error;
};

// A coded byte stream is malformed: bad magic, bad version, bad header
// fields, or a size that disagrees with the header.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hamming
