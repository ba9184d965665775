#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "golay24/gf2.hpp"
#include "golay24/sc.hpp"

namespace golay24 {

struct ChannelConfig {
    double eb_n0_db = 0.0;
    double code_rate = 12.0 / 24.0;
    std::uint64_t seed = 0;

    // Unit symbol energy: sigma^2 = 1 / (2 * R * 10^(EbN0/10)).
    double sigma2() const { return 1.0 / (2.0 * code_rate * std::pow(10.0, eb_n0_db / 10.0)); }
};

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    return splitmix64_next(s);
}

// Per-frame random stream keyed by (seed, frame index), so frame i's data
// and noise are identical no matter which worker draws them or in what
// order.  Normals come from an explicit Box-Muller so the bit stream is
// library-independent.
class FrameRng {
public:
    FrameRng(std::uint64_t seed, std::uint64_t frame_index) : eng_(mix_seed(seed, frame_index)) {}

    std::uint64_t next_u64() { return eng_(); }

    std::uint32_t info_word() { return static_cast<std::uint32_t>(next_u64() & 0xFFFu); }

    void normal_pair(double& z0, double& z1) {
        constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;  // 2^-53
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * kTwoPow53Inv;  // (0, 1]
        double u2 = static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;        // [0, 1)
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * 3.14159265358979323846 * u2;
        z0 = r * std::cos(t);
        z1 = r * std::sin(t);
    }

private:
    std::mt19937_64 eng_;
};

// BPSK bit 0 -> +1, bit 1 -> -1; AWGN of variance sigma^2; LLR = 2y/sigma^2.
inline LlrVector modulate_and_transmit(const BitVector& c, const ChannelConfig& cfg,
                                       FrameRng& rng) {
    if (c.size() != 24) throw std::invalid_argument("modulate_and_transmit: need 24 bits");
    double sigma2 = cfg.sigma2();
    double sigma = std::sqrt(sigma2);
    LlrVector y;
    for (std::size_t j = 0; j < 24; j += 2) {
        double z0, z1;
        rng.normal_pair(z0, z1);
        double s0 = c[j] ? -1.0 : 1.0;
        double s1 = c[j + 1] ? -1.0 : 1.0;
        y[j] = 2.0 * (s0 + sigma * z0) / sigma2;
        y[j + 1] = 2.0 * (s1 + sigma * z1) / sigma2;
    }
    return y;
}

// Zero-noise limit: LLR sign pattern follows (-1)^(c_j), constant magnitude.
inline LlrVector noiseless_llrs(const BitVector& c, double magnitude = 4.0) {
    if (c.size() != 24) throw std::invalid_argument("noiseless_llrs: need 24 bits");
    LlrVector y;
    for (std::size_t j = 0; j < 24; ++j) y[j] = c[j] ? -magnitude : magnitude;
    return y;
}

}  // namespace golay24
