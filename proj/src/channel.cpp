#include "hamming/channel.hpp"

#include <string>

#include "hamming/errors.hpp"

namespace hamming {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitMix64 make_rng(const ChannelConfig& config) {
    return SplitMix64(config.seed);
}

InjectResult inject(const BitBlock& block, const ChannelConfig& config, SplitMix64& rng) {
    InjectResult result{block, {}};
    if (const auto* flip = std::get_if<FlipPosition>(&config.mode)) {
        result.corrupted.flip_bit(flip->position);  // validates the range
        result.flipped_positions.push_back(flip->position);
        return result;
    }
    const auto& bsc = std::get<BscNoise>(config.mode);
    if (!(bsc.crossover >= 0.0 && bsc.crossover <= 1.0)) {
        throw InvalidParameterError("crossover probability " + std::to_string(bsc.crossover) +
                                    " outside [0, 1]");
    }
    for (std::size_t p = 1; p <= block.length(); ++p) {
        if (rng.next_unit() < bsc.crossover) {
            result.corrupted.flip_bit(p);
            result.flipped_positions.push_back(p);
        }
    }
    return result;
}

InjectResult inject(const BitBlock& block, const ChannelConfig& config) {
    SplitMix64 rng = make_rng(config);
    return inject(block, config, rng);
}

}  // namespace hamming
