#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamming/code_params.hpp"
#include "hamming/codec.hpp"

namespace hamming {

// Self-describing header of a coded byte stream, 16 bytes on the wire:
//   [magic "HAMC":4][version:1][m:2 LE][k:1][payload_bit_length:8 LE]
// followed by the codewords packed contiguously MSB-first and zero-padded to
// a byte boundary.
struct FrameHeader {
    static constexpr std::array<std::uint8_t, 4> kMagic{'H', 'A', 'M', 'C'};
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::size_t kSize = 16;

    std::uint16_t m = 0;
    std::uint8_t k = 0;
    std::uint64_t payload_bit_length = 0;  // always a multiple of 8

    CodeParams params() const;
    std::size_t block_count() const;  // ceil(payload_bit_length / m)

    void append_to(std::vector<std::uint8_t>& out) const;

    // Validates magic, version, code parameters and the whole-byte payload
    // length. Throws FormatError on any violation.
    static FrameHeader parse(std::span<const std::uint8_t> bytes);
};

struct BlockOutcome {
    std::size_t block_index = 0;
    DecodeStatus status = DecodeStatus::Clean;
    std::optional<std::size_t> corrected_position;
};

struct StreamReport {
    std::size_t block_count = 0;
    std::size_t corrected = 0;
    std::size_t uncorrectable = 0;
    std::vector<BlockOutcome> outcomes;  // one entry per block, in order

    bool degraded() const { return uncorrectable > 0; }
};

struct DecodedStream {
    std::vector<std::uint8_t> payload;
    StreamReport report;
};

// Parses the header and checks that the stream holds exactly the packed
// bytes the header declares. Corruption tools use this without decoding.
FrameHeader inspect_stream(std::span<const std::uint8_t> coded);

// Frames the payload into m-bit data blocks (MSB-first within each byte,
// final partial block zero-padded), encodes each, and packs the codewords.
std::vector<std::uint8_t> encode_stream(std::span<const std::uint8_t> payload,
                                        const CodeParams& params);

// Decodes every block independently and truncates the recovered bits to the
// declared payload length. Uncorrectable blocks are recorded in the report
// while their best-effort data still enters the payload.
DecodedStream decode_stream(std::span<const std::uint8_t> coded);

}  // namespace hamming
