#include "hamming/stream.hpp"

#include <algorithm>
#include <string>

#include "hamming/errors.hpp"

namespace hamming {

namespace {

// Sequential MSB-first bit access over a byte span; reads past the end
// yield zeros, which is exactly the padding rule for the final data block.
class BitReader {
  public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    int next() {
        if (index_ >= bytes_.size() * 8) {
            return 0;
        }
        const int bit = (bytes_[index_ / 8] >> (7 - index_ % 8)) & 1;
        ++index_;
        return bit;
    }

  private:
    std::span<const std::uint8_t> bytes_;
    std::size_t index_ = 0;
};

// Appends bits MSB-first, growing the byte vector as needed. Unfilled
// trailing bits of the last byte stay zero.
class BitWriter {
  public:
    explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

    void push(int bit) {
        if (index_ % 8 == 0) {
            out_.push_back(0);
        }
        if (bit) {
            out_.back() |= static_cast<std::uint8_t>(0x80u >> (index_ % 8));
        }
        ++index_;
    }

  private:
    std::vector<std::uint8_t>& out_;
    std::size_t index_ = 0;
};

void append_le(std::vector<std::uint8_t>& out, std::uint64_t value, std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i) {
        out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
    }
}

std::size_t packed_block_bytes(std::size_t block_count, std::size_t n) {
    return (block_count * n + 7) / 8;
}

}  // namespace

CodeParams FrameHeader::params() const {
    return CodeParams::create(m, k);
}

std::size_t FrameHeader::block_count() const {
    return static_cast<std::size_t>((payload_bit_length + m - 1) / m);
}

void FrameHeader::append_to(std::vector<std::uint8_t>& out) const {
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    append_le(out, m, 2);
    out.push_back(k);
    append_le(out, payload_bit_length, 8);
}

FrameHeader FrameHeader::parse(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kSize) {
        throw FormatError("coded stream shorter than the " + std::to_string(kSize) +
                          "-byte frame header");
    }
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw FormatError("bad magic; not a coded stream");
    }
    if (bytes[4] != kVersion) {
        throw FormatError("unsupported format version " + std::to_string(bytes[4]));
    }
    FrameHeader header;
    header.m = static_cast<std::uint16_t>(bytes[5] | (bytes[6] << 8));
    header.k = bytes[7];
    header.payload_bit_length = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        header.payload_bit_length |= static_cast<std::uint64_t>(bytes[8 + i]) << (8 * i);
    }
    if (header.payload_bit_length % 8 != 0) {
        throw FormatError("payload bit length " + std::to_string(header.payload_bit_length) +
                          " is not a whole number of bytes");
    }
    try {
        (void)CodeParams::create(header.m, header.k);
    } catch (const InvalidParameterError& e) {
        throw FormatError(std::string("invalid code parameters in header: ") + e.what());
    }
    return header;
}

FrameHeader inspect_stream(std::span<const std::uint8_t> coded) {
    const FrameHeader header = FrameHeader::parse(coded);
    const std::size_t expected =
        FrameHeader::kSize + packed_block_bytes(header.block_count(), header.params().n);
    if (coded.size() < expected) {
        throw FormatError("coded stream truncated: " + std::to_string(coded.size()) +
                          " bytes, header declares " + std::to_string(expected));
    }
    if (coded.size() > expected) {
        throw FormatError("trailing bytes after the coded payload: " +
                          std::to_string(coded.size()) + " bytes, header declares " +
                          std::to_string(expected));
    }
    return header;
}

std::vector<std::uint8_t> encode_stream(std::span<const std::uint8_t> payload,
                                        const CodeParams& params) {
    if (params.m == 0 || params.n == 0) {
        throw InvalidParameterError("encode_stream needs constructed code parameters");
    }
    if (params.m > 0xFFFF || params.k > 0xFF) {
        throw InvalidParameterError("code parameters too large for the frame header");
    }
    FrameHeader header;
    header.m = static_cast<std::uint16_t>(params.m);
    header.k = static_cast<std::uint8_t>(params.k);
    header.payload_bit_length = static_cast<std::uint64_t>(payload.size()) * 8;

    const std::size_t blocks = header.block_count();
    std::vector<std::uint8_t> out;
    out.reserve(FrameHeader::kSize + packed_block_bytes(blocks, params.n));
    header.append_to(out);

    BitReader in(payload);
    BitWriter writer(out);
    BitBlock data(params.m);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t j = 1; j <= params.m; ++j) {
            data.set_bit(j, in.next());
        }
        const BitBlock word = encode(data, params);
        for (std::size_t p = 1; p <= params.n; ++p) {
            writer.push(word.bit(p));
        }
    }
    return out;
}

DecodedStream decode_stream(std::span<const std::uint8_t> coded) {
    const FrameHeader header = inspect_stream(coded);
    const CodeParams params = header.params();
    const std::size_t blocks = header.block_count();

    DecodedStream result;
    result.payload.reserve(header.payload_bit_length / 8);
    result.report.block_count = blocks;
    result.report.outcomes.reserve(blocks);

    BitReader in(coded.subspan(FrameHeader::kSize));
    BitWriter out(result.payload);
    std::uint64_t bits_remaining = header.payload_bit_length;
    BitBlock word(params.n);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t p = 1; p <= params.n; ++p) {
            word.set_bit(p, in.next());
        }
        DecodeOutcome outcome = decode(word, params);
        if (outcome.status == DecodeStatus::Corrected) {
            ++result.report.corrected;
        } else if (outcome.status == DecodeStatus::Uncorrectable) {
            ++result.report.uncorrectable;
        }
        result.report.outcomes.push_back(
            BlockOutcome{b, outcome.status, outcome.corrected_position});
        // Padding bits past the payload length are dropped here, corrupted
        // or not.
        for (std::size_t j = 1; j <= params.m && bits_remaining > 0; ++j, --bits_remaining) {
            out.push(outcome.data.bit(j));
        }
    }
    return result;
}

}  // namespace hamming
