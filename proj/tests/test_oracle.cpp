#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "golay24/block.hpp"
#include "golay24/channel.hpp"
#include "golay24/oracle.hpp"
#include "golay24/textio.hpp"

using namespace golay24;

namespace {

LlrVector random_frame(std::uint64_t seed, std::uint64_t index, double eb_n0_db) {
    FrameRng rng(seed, index);
    BitVector info(12);
    std::uint32_t iw = rng.info_word();
    for (int j = 0; j < 12; ++j) info[j] = static_cast<std::uint8_t>((iw >> j) & 1u);
    ChannelConfig cfg;
    cfg.eb_n0_db = eb_n0_db;
    return modulate_and_transmit(encode(info, golay_spec()), cfg, rng);
}

}  // namespace

TEST_CASE("correlation tables match direct evaluation") {
    LlrVector y = random_frame(1, 0, 1.0);
    MlOracle oracle;
    oracle.build(y);
    for (std::uint32_t w : detail::all_codewords()) {
        double direct = 0.0;
        for (int j = 0; j < 24; ++j) direct += ((w >> j) & 1u) ? -y[j] : y[j];
        CHECK(std::fabs(oracle.corr(w) - direct) <= 1e-9 * (1.0 + std::fabs(direct)));
    }
    // best() is the exhaustive argmax over the same table.
    auto b = oracle.best();
    for (std::uint32_t w : detail::all_codewords()) CHECK(oracle.corr(w) <= b.corr);
}

TEST_CASE("exhaustive decoder basics") {
    LlrVector positive;
    positive.fill(3.5);
    CHECK(ml_decode(positive).codeword == BitVector(24, 0));

    const CodeSpec& spec = golay_spec();
    for (std::uint32_t iw = 0; iw < 4096; iw += 211) {
        BitVector info(12);
        for (int j = 0; j < 12; ++j) info[j] = static_cast<std::uint8_t>((iw >> j) & 1u);
        BitVector c = encode(info, spec);
        auto res = ml_decode(noiseless_llrs(c));
        CHECK(res.codeword == c);
        CHECK(res.info == info);
        CHECK(encode(res.info, spec) == res.codeword);
    }
}

TEST_CASE("exhaustive decoder is scale invariant and constraint-consistent") {
    const CodeSpec& spec = golay_spec();
    for (int rep = 0; rep < 40; ++rep) {
        LlrVector y = random_frame(2, static_cast<std::uint64_t>(rep), 1.0);
        auto base = ml_decode(y);
        for (double lam : {0.1, 37.0}) {
            LlrVector ys;
            for (int j = 0; j < 24; ++j) ys[j] = lam * y[j];
            CHECK(ml_decode(ys).codeword == base.codeword);
        }
        BitVector u = apply_mixed_transform(base.codeword, spec.segment_sizes);
        for (const auto& [i, deps] : spec.cs.constraints) {
            std::uint8_t b = u[i];
            for (std::size_t j : deps) b ^= u[j];
            CHECK(b == 0);
        }
    }
}

TEST_CASE("weight distributions") {
    BitMatrix zero(1, 8);
    CHECK(weight_distribution(zero) == std::map<int, long long>{{0, 1}});

    auto [cp, cpp] = build_component_codes();
    (void)cpp;
    CHECK(weight_distribution(cp.generator) ==
          std::map<int, long long>{{0, 1}, {4, 14}, {8, 1}});

    BitMatrix g = matrix_from_text(fixtures::kGeneratorText);
    CHECK(weight_distribution(g) ==
          std::map<int, long long>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});

    CHECK_THROWS_AS(weight_distribution(BitMatrix(21, 4)), std::invalid_argument);
}

TEST_CASE("path llr reference small cases") {
    OpCounter ops;
    // m=1, empty prefix: the definition reduces to a single boxplus.
    std::vector<double> y2{1.7, -2.4};
    CHECK(std::fabs(brute_force_path_llr(1, y2, {}) - boxplus(y2[0], y2[1], ops)) <= 1e-12);

    // Terminal phase m=1: scoring u1 after u0 is a plain g-step.
    for (std::uint8_t u0 : {0, 1}) {
        double want = g_step(y2[0], y2[1], u0, ops);
        CHECK(std::fabs(brute_force_path_llr(1, y2, {u0}) - want) <= 1e-12);
    }

    CHECK_THROWS_AS(brute_force_path_llr(4, std::vector<double>(16, 1.0), {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_path_llr(2, std::vector<double>(3, 1.0), {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_path_llr(1, y2, {0, 1}), std::invalid_argument);
}

TEST_CASE("regression fixtures reproduce") {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/ml_regression.txt");
    REQUIRE(in.good());
    std::string line;
    int frames = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string bits;
        LlrVector y;
        for (int j = 0; j < 24; ++j) REQUIRE((ls >> y[j]));
        REQUIRE((ls >> bits));
        BitVector want = parse_bits(bits);
        auto res = ml_decode(y);
        CHECK(res.codeword == want);
        CHECK(block_decode(y).codeword == want);
        ++frames;
    }
    CHECK(frames >= 32);
}
