#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "golay24/channel.hpp"
#include "golay24/golay.hpp"
#include "golay24/oracle.hpp"
#include "golay24/sc.hpp"

using namespace golay24;

namespace {

LlrVector random_frame(std::uint64_t seed, std::uint64_t index, double eb_n0_db,
                       BitVector* sent = nullptr) {
    FrameRng rng(seed, index);
    BitVector info(12);
    std::uint32_t iw = rng.info_word();
    for (int j = 0; j < 12; ++j) info[j] = static_cast<std::uint8_t>((iw >> j) & 1u);
    BitVector c = encode(info, golay_spec());
    if (sent) *sent = c;
    ChannelConfig cfg;
    cfg.eb_n0_db = eb_n0_db;
    return modulate_and_transmit(c, cfg, rng);
}

}  // namespace

TEST_CASE("boxplus") {
    OpCounter ops;
    CHECK(boxplus(2.0, -3.0, ops) == -2.0);
    CHECK(boxplus(0.0, -7.5, ops) == 0.0);
    CHECK(boxplus(0.0, 7.5, ops) == 0.0);
    CHECK(boxplus(5.0, 4.0, ops) == 4.0);
    CHECK(boxplus(-5.0, -4.0, ops) == 4.0);
    CHECK(ops.comparisons == 5);
    CHECK(ops.summations == 0);
}

TEST_CASE("g_step") {
    OpCounter ops;
    CHECK(g_step(2.0, 3.0, 0, ops) == 5.0);
    CHECK(g_step(2.0, 3.0, 1, ops) == 1.0);
    CHECK(g_step(-1.0, 1.0, 1, ops) == 2.0);
    CHECK(ops.summations == 3);
    CHECK(ops.comparisons == 0);
}

TEST_CASE("score update penalties") {
    OpCounter ops;
    double r = 0.0;
    tau_update(r, 1.5, 0, ops);
    CHECK(r == 0.0);
    tau_update(r, 1.5, 1, ops);
    CHECK(r == -1.5);
    r = 0.0;
    tau_update(r, 0.0, 0, ops);
    tau_update(r, 0.0, 1, ops);  // sgn(0) = +1: deciding 1 against 0.0 costs |0| = 0
    CHECK(r == 0.0);
    CHECK(ops.comparisons == 4);
}

TEST_CASE("segment phase 0 is a boxplus tree") {
    std::vector<double> y(8, 4.0);
    SegmentDecoder seg(3, y.data());
    OpCounter ops;
    CHECK(seg.llr(0, ops) == 4.0);
    CHECK(ops.comparisons == 7);  // 4 + 2 + 1 boxplus nodes
}

TEST_CASE("segment phases must be visited in order") {
    std::vector<double> y(8, 1.0);
    SegmentDecoder seg(3, y.data());
    OpCounter ops;
    CHECK_THROWS_AS(seg.llr(1, ops), std::logic_error);
    seg.llr(0, ops);
    seg.feed(0);
    CHECK_THROWS_AS(seg.llr(0, ops), std::logic_error);
}

TEST_CASE("segment codeword equals the transform of the fed bits") {
    std::mt19937_64 rng(31);
    for (int m = 1; m <= 4; ++m) {
        std::size_t n = std::size_t{1} << m;
        for (int rep = 0; rep < 32; ++rep) {
            std::vector<double> y(n);
            for (auto& v : y) v = (rng() % 7) - 3.0;
            BitVector u(n);
            for (auto& b : u) b = static_cast<std::uint8_t>(rng() & 1u);
            SegmentDecoder seg(m, y.data());
            OpCounter ops;
            for (std::size_t phi = 0; phi < n; ++phi) {
                seg.llr(phi, ops);
                seg.feed(u[phi]);
            }
            BitVector c = apply_mixed_transform(u, {m});
            for (std::size_t beta = 0; beta < n; ++beta) CHECK(seg.codeword_bit(beta) == c[beta]);
        }
    }
}

TEST_CASE("half partial sums equal the closed-form transform") {
    std::mt19937_64 rng(32);
    for (int m = 1; m <= 4; ++m) {
        std::size_t half = std::size_t{1} << (m - 1);
        for (std::uint32_t w = 0; w < (1u << half); ++w) {
            BitVector bits(half);
            for (std::size_t j = 0; j < half; ++j) bits[j] = static_cast<std::uint8_t>((w >> j) & 1u);
            CHECK(half_partial_sums(bits, m) == apply_mixed_transform(bits, {m - 1}));
        }
    }
    CHECK_THROWS_AS(half_partial_sums(BitVector(3, 0), 3), std::invalid_argument);
}

TEST_CASE("segment llr equals the exhaustive reference") {
    std::mt19937_64 seed_rng(77);
    for (int m = 1; m <= 3; ++m) {
        std::size_t n = std::size_t{1} << m;
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<double> y(n);
            FrameRng rng(1000 + m, static_cast<std::uint64_t>(rep));
            for (std::size_t j = 0; j < n; j += 2) {
                double a, b;
                rng.normal_pair(a, b);
                y[j] = 3.0 * a;
                if (j + 1 < n) y[j + 1] = 3.0 * b;
            }
            // All prefixes at all phases.
            for (std::size_t phi = 0; phi < n; ++phi) {
                std::size_t num_prefixes = std::size_t{1} << phi;
                for (std::size_t pw = 0; pw < num_prefixes; ++pw) {
                    BitVector prefix(phi);
                    for (std::size_t j = 0; j < phi; ++j)
                        prefix[j] = static_cast<std::uint8_t>((pw >> j) & 1u);
                    SegmentDecoder seg(m, y.data());
                    OpCounter ops;
                    for (std::size_t j = 0; j < phi; ++j) {
                        seg.llr(j, ops);
                        seg.feed(prefix[j]);
                    }
                    double got = seg.llr(phi, ops);
                    double want = brute_force_path_llr(m, y, prefix);
                    CHECK(std::fabs(got - want) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("full path score equals minus the codeword energy") {
    const CodeSpec& spec = golay_spec();
    std::mt19937_64 rng(55);
    for (int rep = 0; rep < 200; ++rep) {
        LlrVector y = random_frame(2024, static_cast<std::uint64_t>(rep), 2.0);
        BitVector u(24);
        for (auto& b : u) b = static_cast<std::uint8_t>(rng() & 1u);
        auto [r, e] = path_score_identity_check(u, y, spec);
        CHECK(r <= 1e-12);
        CHECK(std::fabs(r + e) <= 1e-9 * (1.0 + std::fabs(e)));
    }
    // All-positive LLRs and u = 0: both sides vanish.
    LlrVector clean;
    clean.fill(4.0);
    auto [r0, e0] = path_score_identity_check(BitVector(24, 0), clean, spec);
    CHECK(r0 == 0.0);
    CHECK(e0 == 0.0);
}

TEST_CASE("list decode on a noiseless frame") {
    const CodeSpec& spec = golay_spec();
    LlrVector y;
    y.fill(4.0);
    auto results = list_decode(y, spec, 1);
    REQUIRE(results.size() == 1);
    CHECK(results[0].codeword == BitVector(24, 0));
    CHECK(results[0].info == BitVector(12, 0));
    CHECK(results[0].score == 0.0);
    CHECK_THROWS_AS(list_decode(y, spec, 0), std::invalid_argument);
}

TEST_CASE("list decode results are ranked and internally consistent") {
    const CodeSpec& spec = golay_spec();
    for (int rep = 0; rep < 50; ++rep) {
        LlrVector y = random_frame(3030, static_cast<std::uint64_t>(rep), 1.0);
        auto results = list_decode(y, spec, 8);
        REQUIRE(results.size() == 8);
        for (std::size_t i = 1; i < results.size(); ++i)
            CHECK(results[i - 1].score >= results[i].score);
        for (const auto& r : results) {
            CHECK(r.codeword == encode(r.info, spec));
            CHECK(std::fabs(r.score + min_sum_energy(r.codeword, y.data())) <=
                  1e-9 * (1.0 + std::fabs(r.score)));
        }
    }
}

TEST_CASE("unpruned list decode is exhaustive search") {
    const CodeSpec& spec = golay_spec();
    for (int rep = 0; rep < 10; ++rep) {
        LlrVector y = random_frame(4040, static_cast<std::uint64_t>(rep), 0.5);
        auto results = list_decode(y, spec, 4096);
        REQUIRE(results.size() == 4096);
        auto ml = ml_decode(y);
        CHECK(results[0].score >= ml.score - 1e-9 * (1.0 + std::fabs(ml.score)));
        MlOracle oracle;
        oracle.build(y);
        double got = oracle.corr(detail::word_of(results[0].codeword));
        double best = oracle.best().corr;
        CHECK(std::fabs(got - best) <= 1e-9 * (1.0 + std::fabs(best)));
    }
}

TEST_CASE("stack search agrees with list decoding") {
    const CodeSpec& spec = golay_spec();
    LlrVector clean;
    clean.fill(4.0);
    auto seq = sequential_decode(clean, spec, 16);
    CHECK(seq.codeword == BitVector(24, 0));
    CHECK_FALSE(seq.fallback);

    for (int rep = 0; rep < 150; ++rep) {
        LlrVector y = random_frame(5050, static_cast<std::uint64_t>(rep), 1.0);
        auto top = list_decode(y, spec, 16)[0];
        auto got = sequential_decode(y, spec, 16);
        CHECK_FALSE(got.fallback);
        if (got.codeword != top.codeword)
            CHECK(std::fabs(got.score - top.score) <= 1e-9 * (1.0 + std::fabs(top.score)));
        // Best-first expands no more nodes than the lockstep sweep.
        CHECK(got.ops.total() <= top.ops.total());
    }
    CHECK_THROWS_AS(sequential_decode(clean, spec, 0), std::invalid_argument);
}

TEST_CASE("stack search budget fallback") {
    const CodeSpec& spec = golay_spec();
    LlrVector y = random_frame(6060, 3, 0.0);
    auto r = sequential_decode(y, spec, 16, 4);
    CHECK(r.fallback);
    CHECK(r.codeword == encode(r.info, spec));  // still a valid codeword
}

TEST_CASE("decisions are invariant under positive scaling") {
    const CodeSpec& spec = golay_spec();
    for (int rep = 0; rep < 30; ++rep) {
        LlrVector y = random_frame(7070, static_cast<std::uint64_t>(rep), 1.5);
        for (double lam : {0.1, 37.0}) {
            LlrVector ys;
            for (std::size_t j = 0; j < 24; ++j) ys[j] = lam * y[j];
            auto a = list_decode(y, spec, 16);
            auto b = list_decode(ys, spec, 16);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].codeword == b[i].codeword);
            CHECK(sequential_decode(y, spec, 16).codeword ==
                  sequential_decode(ys, spec, 16).codeword);
        }
    }
}
