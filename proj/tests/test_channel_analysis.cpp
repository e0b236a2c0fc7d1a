#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "hamming/analysis.hpp"
#include "hamming/channel.hpp"
#include "hamming/codec.hpp"
#include "hamming/errors.hpp"

using namespace hamming;

TEST_CASE("generator matches the published splitmix64 outputs") {
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xE220A8397B1DCDAFull);
    CHECK(zero.next() == 0x6E789E6AA1B965F4ull);
    CHECK(zero.next() == 0x06C45D188009454Full);
    CHECK(zero.next() == 0xF88BB8A8724C81ECull);
    CHECK(zero.next() == 0x1B39896A51A8749Bull);

    SplitMix64 seeded(1234567);
    CHECK(seeded.next() == 0x599ED017FB08FC85ull);
    CHECK(seeded.next() == 0x2C73F08458540FA5ull);
    CHECK(seeded.next() == 0x883EBCE5A3F27C77ull);

    SplitMix64 a(42);
    SplitMix64 b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next() == b.next());
    }
}

TEST_CASE("unit draws stay in [0, 1) and look uniform") {
    SplitMix64 rng(42);
    CHECK(rng.next_unit() == doctest::Approx(0.74156487877182331).epsilon(1e-15));

    SplitMix64 fresh(7);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double draw = fresh.next_unit();
        CHECK(draw >= 0.0);
        CHECK(draw < 1.0);
        sum += draw;
    }
    CHECK(sum / 10000.0 == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("single-position injection flips exactly the named bit") {
    const CodeParams params = CodeParams::create(4, 3);
    const BitBlock word = encode(BitBlock::from_string("1011"), params);

    const ChannelConfig config{FlipPosition{5}, 0};
    const InjectResult result = inject(word, config);
    CHECK(result.flipped_positions == std::vector<std::size_t>{5});
    CHECK((result.corrupted ^ word).to_string() == "0000100");

    const ChannelConfig bad{FlipPosition{8}, 0};
    CHECK_THROWS_AS(inject(word, bad), PositionRangeError);
}

TEST_CASE("symmetric channel noise is seed-reproducible") {
    const BitBlock word(64);

    const ChannelConfig config{BscNoise{0.5}, 2024};
    const InjectResult first = inject(word, config);
    const InjectResult second = inject(word, config);
    CHECK(first.corrupted == second.corrupted);
    CHECK(first.flipped_positions == second.flipped_positions);
    CHECK(std::is_sorted(first.flipped_positions.begin(), first.flipped_positions.end()));

    const ChannelConfig other{BscNoise{0.5}, 2025};
    CHECK(inject(word, other).corrupted != first.corrupted);

    const ChannelConfig silent{BscNoise{0.0}, 2024};
    CHECK(inject(word, silent).flipped_positions.empty());
    const ChannelConfig saturating{BscNoise{1.0}, 2024};
    CHECK(inject(word, saturating).flipped_positions.size() == 64);

    const ChannelConfig invalid{BscNoise{1.5}, 2024};
    CHECK_THROWS_AS(inject(word, invalid), InvalidParameterError);
}

TEST_CASE("an rng can be threaded through several injections") {
    const BitBlock word(32);
    const ChannelConfig config{BscNoise{0.5}, 99};

    SplitMix64 rng = make_rng(config);
    const InjectResult first = inject(word, config, rng);
    const InjectResult second = inject(word, config, rng);
    CHECK(first.corrupted != second.corrupted);

    SplitMix64 replay = make_rng(config);
    CHECK(inject(word, config, replay).corrupted == first.corrupted);
}

TEST_CASE("brute force finds distance 3 for every single-error code") {
    CHECK(min_distance_bruteforce(CodeParams::create(1, 2)) == 3);
    CHECK(min_distance_bruteforce(CodeParams::create(3, 3)) == 3);
    CHECK(min_distance_bruteforce(CodeParams::create(4, 3)) == 3);
    CHECK(min_distance_bruteforce(CodeParams::create(11, 4)) == 3);
}

TEST_CASE("weight distributions count codewords by ones") {
    const std::map<std::size_t, std::size_t> expected{{0, 1}, {3, 7}, {4, 7}, {7, 1}};
    CHECK(weight_distribution(CodeParams::create(4, 3)) == expected);

    const std::map<std::size_t, std::size_t> repetition{{0, 1}, {3, 1}};
    CHECK(weight_distribution(CodeParams::create(1, 2)) == repetition);

    std::size_t total = 0;
    for (const auto& [weight, count] : weight_distribution(CodeParams::create(8, 4))) {
        (void)weight;
        total += count;
    }
    CHECK(total == 256);
}

TEST_CASE("exhaustive correction covers every word and position") {
    CHECK(exhaustive_correction_check(CodeParams::create(4, 3)));
    CHECK(exhaustive_correction_check(CodeParams::create(3, 3)));
}

TEST_CASE("desk-scale guards reject oversized enumerations") {
    CHECK_THROWS_AS(min_distance_bruteforce(derive_params(21)), ResourceLimitError);
    CHECK_THROWS_AS(weight_distribution(derive_params(21)), ResourceLimitError);
    CHECK_THROWS_AS(exhaustive_correction_check(derive_params(17)), ResourceLimitError);
    CHECK_THROWS_AS(analyze_code(derive_params(17)), ResourceLimitError);
}

TEST_CASE("analysis report prints the frozen layout") {
    const AnalysisReport report = analyze_code(CodeParams::create(4, 3));
    CHECK(report.rate() == doctest::Approx(4.0 / 7.0));
    CHECK(report.min_distance == 3);
    CHECK(report.correction_coverage == 1.0);
    CHECK(report.to_text() ==
          "code (7,4)\n"
          "n 7\n"
          "m 4\n"
          "k 3\n"
          "rate 4/7 = 0.571429\n"
          "min_distance 3\n"
          "weight_distribution 0:1 3:7 4:7 7:1\n"
          "correction_coverage 1.000000\n");
}

TEST_CASE("simulated block failure matches the closed form") {
    const CodeParams params = CodeParams::create(4, 3);

    CHECK(block_error_rate_sim(params, 0.0, 1000, 1) == 0.0);
    // Complementing a (7,4) codeword lands on another codeword, so a
    // crossover of 1 corrupts silently on every trial.
    CHECK(block_error_rate_sim(params, 1.0, 1000, 1) == 1.0);
    CHECK_THROWS_AS(block_error_rate_sim(params, 0.01, 0, 1), InvalidParameterError);

    const double p = 0.01;
    const std::size_t trials = 100000;
    const double closed = 1.0 - std::pow(1.0 - p, 7) - 7.0 * p * std::pow(1.0 - p, 6);
    const double sigma = std::sqrt(closed * (1.0 - closed) / static_cast<double>(trials));
    const double estimate = block_error_rate_sim(params, p, trials, 20260815);
    CHECK(std::abs(estimate - closed) <= 3.0 * sigma);
}
