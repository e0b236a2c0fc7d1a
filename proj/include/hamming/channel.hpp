#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "hamming/bit_block.hpp"

namespace hamming {

// splitmix64. The recurrence is part of the external contract so that
// reimplementations reproduce noise streams bit for bit:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform in [0, 1): the top 53 bits of next() scaled by 2^-53.
    double next_unit();

  private:
    std::uint64_t state_;
};

// Deterministic flip of one 1-indexed position.
struct FlipPosition {
    std::size_t position = 0;
};

// Binary symmetric channel: every bit flips independently with the given
// crossover probability, drawn in ascending position order.
struct BscNoise {
    double crossover = 0.0;
};

struct ChannelConfig {
    std::variant<FlipPosition, BscNoise> mode;
    std::uint64_t seed = 0;
};

struct InjectResult {
    BitBlock corrupted;
    std::vector<std::size_t> flipped_positions;  // ground truth, ascending
};

SplitMix64 make_rng(const ChannelConfig& config);

InjectResult inject(const BitBlock& block, const ChannelConfig& config, SplitMix64& rng);

// Convenience overload seeding a fresh generator from config.seed.
InjectResult inject(const BitBlock& block, const ChannelConfig& config);

}  // namespace hamming
