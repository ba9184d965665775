#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "golay24/fixtures.hpp"
#include "golay24/gf2.hpp"
#include "golay24/golay.hpp"
#include "golay24/sc.hpp"

namespace golay24 {

namespace detail {

inline std::uint32_t word_of(const BitVector& v) {
    std::uint32_t w = 0;
    for (std::size_t j = 0; j < v.size(); ++j) w |= static_cast<std::uint32_t>(v[j]) << j;
    return w;
}

inline const std::vector<std::uint32_t>& all_codewords() {
    static const std::vector<std::uint32_t> words = [] {
        BitMatrix g = matrix_from_text(fixtures::kGeneratorText);
        std::array<std::uint32_t, 12> rows{};
        for (std::size_t r = 0; r < 12; ++r) rows[r] = word_of(g.row(r));
        std::vector<std::uint32_t> out(4096);
        std::uint32_t cur = 0;
        out[0] = 0;
        for (std::uint32_t i = 1; i < 4096; ++i) {
            cur ^= rows[__builtin_ctz(i)];
            out[i] = cur;
        }
        return out;
    }();
    return words;
}

}  // namespace detail

// Exhaustive maximum-correlation reference.  Correlations against all 4096
// codewords are read from two half-length tables built per frame in Gray
// order (one +-2y update per step), so corr() is two loads and one add.
// Agreement checks must evaluate both sides through the same corr() to keep
// rounding identical.
class MlOracle {
public:
    void build(const LlrVector& y) {
        build_half(corr_a_, y.data());
        build_half(corr_b_, y.data() + 12);
    }

    double corr(std::uint32_t c) const { return corr_a_[c & 0xFFFu] + corr_b_[(c >> 12) & 0xFFFu]; }

    struct Best {
        std::uint32_t codeword = 0;
        double corr = 0.0;
    };

    Best best() const {
        const auto& words = detail::all_codewords();
        Best b{words[0], corr(words[0])};
        for (std::size_t i = 1; i < words.size(); ++i) {
            double v = corr(words[i]);
            if (v > b.corr) {
                b.codeword = words[i];
                b.corr = v;
            }
        }
        return b;
    }

private:
    static void build_half(std::array<double, 4096>& tab, const double* y) {
        double cur = 0.0;
        for (int j = 0; j < 12; ++j) cur += y[j];
        tab[0] = cur;
        std::uint32_t pattern = 0;
        for (std::uint32_t i = 1; i < 4096; ++i) {
            int j = __builtin_ctz(i);
            std::uint32_t bit = 1u << j;
            cur += (pattern & bit) ? 2.0 * y[j] : -2.0 * y[j];
            pattern ^= bit;
            tab[pattern] = cur;
        }
    }

    std::array<double, 4096> corr_a_{};
    std::array<double, 4096> corr_b_{};
};

inline DecodeResult ml_decode(const LlrVector& y) {
    MlOracle oracle;
    oracle.build(y);
    MlOracle::Best b = oracle.best();
    DecodeResult out;
    out.codeword.resize(24);
    for (std::size_t j = 0; j < 24; ++j) out.codeword[j] = (b.codeword >> j) & 1u;
    const CodeSpec& spec = golay_spec();
    BitVector u = apply_mixed_transform(out.codeword, spec.segment_sizes);  // self-inverse
    out.info = detail::extract_info(spec, u);
    out.score = -min_sum_energy(out.codeword, y.data());
    return out;  // the oracle is a reference; its work is not op-counted
}

// Exact weight enumerator of the span of g, as a set of codewords.
inline std::map<int, long long> weight_distribution(const BitMatrix& g) {
    if (g.rows > 20) throw std::invalid_argument("weight_distribution: too many rows");
    if (g.cols > 64) throw std::invalid_argument("weight_distribution: too many columns");
    std::vector<std::uint64_t> rows(g.rows, 0);
    for (std::size_t r = 0; r < g.rows; ++r)
        for (std::size_t c = 0; c < g.cols; ++c)
            if (g.at(r, c)) rows[r] |= std::uint64_t{1} << c;
    std::vector<std::uint64_t> span(std::size_t{1} << g.rows);
    std::uint64_t cur = 0;
    span[0] = 0;
    for (std::size_t i = 1; i < span.size(); ++i) {
        cur ^= rows[__builtin_ctzll(i)];
        span[i] = cur;
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    std::map<int, long long> dist;
    for (std::uint64_t w : span) dist[__builtin_popcountll(w)] += 1;
    return dist;
}

// Exhausts all continuations of the prefix over one length-2^m segment and
// returns the min-sum soft value for the next symbol: best score with that
// symbol 0 minus best score with it 1.  Matches SegmentDecoder::llr.
inline double brute_force_path_llr(int m, const std::vector<double>& y, const BitVector& prefix) {
    if (m < 1 || m > 3) throw std::invalid_argument("brute_force_path_llr: m must be in 1..3");
    std::size_t n = std::size_t{1} << m;
    if (y.size() != n) throw std::invalid_argument("brute_force_path_llr: need 2^m soft values");
    if (prefix.size() >= n)
        throw std::invalid_argument("brute_force_path_llr: prefix leaves no symbol to score");
    std::size_t phi = prefix.size();
    double best[2] = {-std::numeric_limits<double>::infinity(),
                      -std::numeric_limits<double>::infinity()};
    BitVector u(n, 0);
    std::copy(prefix.begin(), prefix.end(), u.begin());
    for (std::size_t tail = 0; tail < (std::size_t{1} << (n - phi)); ++tail) {
        for (std::size_t k = 0; k < n - phi; ++k) u[phi + k] = (tail >> k) & 1u;
        BitVector c = apply_mixed_transform(u, {m});
        double s = -min_sum_energy(c, y.data());
        if (s > best[u[phi]]) best[u[phi]] = s;
    }
    return best[0] - best[1];
}

}  // namespace golay24
