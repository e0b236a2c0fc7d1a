#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <fstream>
#include <iterator>
#include <vector>

#include "hamming/channel.hpp"
#include "hamming/errors.hpp"
#include "hamming/stream.hpp"

using namespace hamming;

namespace {

std::vector<std::uint8_t> random_payload(std::size_t size, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> payload(size);
    for (std::uint8_t& byte : payload) {
        byte = static_cast<std::uint8_t>(rng.next());
    }
    return payload;
}

std::vector<std::uint8_t> golden_bytes(const char* name) {
    const std::string path = std::string(HAMMING_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("one framed byte matches the format documentation") {
    // 0xB0 splits into data blocks 1011 and 0000; their codewords 0110011
    // and 0000000 pack to 0x66 0x00 behind the 16-byte header.
    const std::vector<std::uint8_t> expected{
        'H', 'A', 'M', 'C', 0x01, 0x04, 0x00, 0x03,
        0x08, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x66, 0x00,
    };
    const auto coded = encode_stream(std::vector<std::uint8_t>{0xB0},
                                     CodeParams::create(4, 3));
    CHECK(coded == expected);
    CHECK(coded == golden_bytes("b0_m4.ham"));

    const DecodedStream decoded = decode_stream(coded);
    CHECK(decoded.payload == std::vector<std::uint8_t>{0xB0});
    CHECK(decoded.report.block_count == 2);
    CHECK(decoded.report.corrected == 0);
}

TEST_CASE("header fields survive a parse round trip") {
    const auto coded = encode_stream(random_payload(33, 5), CodeParams::create(8, 4));
    const FrameHeader header = inspect_stream(coded);
    CHECK(header.m == 8);
    CHECK(header.k == 4);
    CHECK(header.payload_bit_length == 33 * 8);
    CHECK(header.params().n == 12);
    CHECK(header.block_count() == (33 * 8 + 7) / 8);
}

TEST_CASE("an empty payload frames to a bare header") {
    const auto coded = encode_stream({}, CodeParams::create(4, 3));
    CHECK(coded.size() == FrameHeader::kSize);
    const DecodedStream decoded = decode_stream(coded);
    CHECK(decoded.payload.empty());
    CHECK(decoded.report.block_count == 0);
    CHECK_FALSE(decoded.report.degraded());
}

TEST_CASE("payloads round trip across code shapes") {
    const std::size_t ms[] = {1, 3, 4, 8, 11};
    for (const std::size_t m : ms) {
        const CodeParams params = derive_params(m);
        for (const std::size_t size : {0u, 1u, 2u, 63u, 256u}) {
            const auto payload = random_payload(size, m * 1000 + size);
            const DecodedStream decoded = decode_stream(encode_stream(payload, params));
            CHECK(decoded.payload == payload);
            CHECK(decoded.report.corrected == 0);
            CHECK(decoded.report.uncorrectable == 0);
            CHECK(decoded.report.outcomes.size() == decoded.report.block_count);
        }
    }
}

TEST_CASE("parser rejects malformed headers") {
    auto coded = encode_stream(random_payload(8, 9), CodeParams::create(4, 3));

    CHECK_THROWS_AS(inspect_stream(std::vector<std::uint8_t>(coded.begin(), coded.begin() + 15)),
                    FormatError);

    auto bad_magic = coded;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(inspect_stream(bad_magic), FormatError);

    auto bad_version = coded;
    bad_version[4] = 2;
    CHECK_THROWS_AS(inspect_stream(bad_version), FormatError);

    auto ragged_bits = coded;
    ragged_bits[8] = 0x03;
    CHECK_THROWS_AS(inspect_stream(ragged_bits), FormatError);

    auto bad_params = coded;
    bad_params[7] = 2;
    CHECK_THROWS_AS(inspect_stream(bad_params), FormatError);
}

TEST_CASE("stream length must match the declared block count exactly") {
    auto coded = encode_stream(random_payload(8, 10), CodeParams::create(4, 3));

    auto truncated = coded;
    truncated.pop_back();
    CHECK_THROWS_AS(decode_stream(truncated), FormatError);
    CHECK_THROWS_AS(inspect_stream(truncated), FormatError);

    auto trailing = coded;
    trailing.push_back(0x00);
    CHECK_THROWS_AS(decode_stream(trailing), FormatError);
}

TEST_CASE("a flipped bit is pinpointed per block and repaired") {
    const CodeParams params = CodeParams::create(4, 3);
    const auto payload = random_payload(16, 11);
    auto coded = encode_stream(payload, params);

    const std::size_t block = 5;
    const std::size_t position = 3;
    const std::size_t bit_index = block * params.n + (position - 1);
    coded[FrameHeader::kSize + bit_index / 8] ^=
        static_cast<std::uint8_t>(0x80u >> (bit_index % 8));

    const DecodedStream decoded = decode_stream(coded);
    CHECK(decoded.payload == payload);
    CHECK(decoded.report.corrected == 1);
    CHECK(decoded.report.uncorrectable == 0);
    CHECK_FALSE(decoded.report.degraded());
    CHECK(decoded.report.outcomes[block].status == DecodeStatus::Corrected);
    CHECK(decoded.report.outcomes[block].corrected_position == position);
    CHECK(decoded.report.outcomes[0].status == DecodeStatus::Clean);
}

TEST_CASE("double corruption of a shortened block degrades the stream") {
    const CodeParams params = CodeParams::create(3, 3);
    const std::vector<std::uint8_t> payload{0x00, 0x00, 0x00};
    auto coded = encode_stream(payload, params);

    // Positions 1 and 6 of the zero codeword push the checking number to 7,
    // past the block length.
    for (const std::size_t position : {1u, 6u}) {
        const std::size_t bit_index = position - 1;
        coded[FrameHeader::kSize + bit_index / 8] ^=
            static_cast<std::uint8_t>(0x80u >> (bit_index % 8));
    }

    const DecodedStream decoded = decode_stream(coded);
    CHECK(decoded.report.uncorrectable == 1);
    CHECK(decoded.report.degraded());
    CHECK(decoded.report.outcomes[0].status == DecodeStatus::Uncorrectable);
    CHECK_FALSE(decoded.report.outcomes[0].corrected_position.has_value());
}

TEST_CASE("padding bits beyond the payload are ignored on decode") {
    // 3 bytes at m=11 leaves the last block mostly padding.
    const auto payload = random_payload(3, 12);
    const CodeParams params = derive_params(11);
    const DecodedStream decoded = decode_stream(encode_stream(payload, params));
    CHECK(decoded.payload == payload);
    CHECK(decoded.report.block_count == 3);
}

TEST_CASE("frame fields reject parameters that cannot be represented") {
    CHECK_THROWS_AS(encode_stream({}, CodeParams::create(70000, 17)), InvalidParameterError);
}
