#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "golay24/fht.hpp"
#include "golay24/golay.hpp"
#include "golay24/op_counter.hpp"
#include "golay24/sc.hpp"

namespace golay24 {

using CorrelationTable = std::vector<double>;

// A stage-1 hypothesis: the twelve symbols u0..u7, u16..u19 plus the
// combined correlation r of the two half-length codewords with z, the
// constant -sum|z_j| term dropped.
struct Stage1Path {
    std::array<std::uint8_t, 8> u_first{};   // u0..u7 (u0=u1=u2=u4=0)
    std::array<std::uint8_t, 4> u_second{};  // u16..u19 (u16=0, u17=u3, u18=u5)
    double r = 0.0;
};

namespace detail {

// Rows of the order-2^m transform as bitmasks, for the free coset bookkeeping.
inline const std::array<std::uint32_t, 8>& a3_row_masks() {
    static const std::array<std::uint32_t, 8> rows = [] {
        std::array<std::uint32_t, 8> out{};
        BitMatrix a = polarizing_transform(3);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                if (a.at(i, j)) out[i] |= 1u << j;
        return out;
    }();
    return rows;
}

inline const std::array<std::uint32_t, 4>& a2_row_masks() {
    static const std::array<std::uint32_t, 4> rows = [] {
        std::array<std::uint32_t, 4> out{};
        BitMatrix a = polarizing_transform(2);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (a.at(i, j)) out[i] |= 1u << j;
        return out;
    }();
    return rows;
}

inline bool satisfies_constraints(const std::array<std::uint8_t, 24>& u) {
    for (const auto& [i, deps] : golay_spec().cs.constraints) {
        std::uint8_t b = u[i];
        for (std::size_t j : deps) b ^= u[j];
        if (b) return false;
    }
    return true;
}

inline std::array<std::uint8_t, 24> assemble_symbols(std::uint8_t u3, std::uint8_t u5,
                                                     std::uint8_t u6, std::uint8_t u7,
                                                     std::uint8_t u19, std::uint8_t u9,
                                                     std::uint8_t u21, std::uint8_t u22,
                                                     std::uint8_t u23, int t_star,
                                                     std::uint8_t sign_bit) {
    std::array<std::uint8_t, 24> u{};
    u[3] = u3;
    u[5] = u5;
    u[6] = u6;
    u[7] = u7;
    u[9] = u9;
    u[10] = static_cast<std::uint8_t>(u3 ^ u5 ^ u21);
    u[11] = static_cast<std::uint8_t>(t_star & 1);
    u[12] = static_cast<std::uint8_t>(u3 ^ u22);
    u[13] = static_cast<std::uint8_t>((t_star >> 1) & 1);
    u[14] = static_cast<std::uint8_t>((t_star >> 2) & 1);
    u[15] = static_cast<std::uint8_t>(u[11] ^ u[13] ^ u[14] ^ sign_bit);
    u[17] = u3;
    u[18] = u5;
    u[19] = u19;
    u[20] = u9;
    u[21] = u21;
    u[22] = u22;
    u[23] = u23;
    return u;
}

}  // namespace detail

// Score all 32 stage-1 hypotheses with one order-8 and one order-4 FHT.
// Only the 16 combined magnitudes are sorted (insertion sort, counted); the
// other 16 paths are the sign-flipped pairs, appended in mirror order so the
// result is globally descending in r.
inline std::array<Stage1Path, 32> stage1_enumerate(const LlrVector& y, OpCounter& ops) {
    std::array<double, 8> f8;
    std::array<double, 4> f4;
    for (int j = 0; j < 8; ++j) f8[j] = boxplus(y[2 * j], y[2 * j + 1], ops);
    for (int j = 8; j < 12; ++j) f4[j - 8] = boxplus(y[2 * j], y[2 * j + 1], ops);
    fht_inplace(f8.data(), 8, ops);
    fht_inplace(f4.data(), 4, ops);

    struct Entry {
        double mag;
        std::uint8_t neg, type, u3, u5, u6;
    };
    std::array<Entry, 16> entries;
    int k = 0;
    for (std::uint8_t u3 = 0; u3 < 2; ++u3)
        for (std::uint8_t u5 = 0; u5 < 2; ++u5)
            for (std::uint8_t u6 = 0; u6 < 2; ++u6) {
                int t = u3 + 2 * u5 + 4 * u6;
                int s = u3 + 2 * u5;
                double a = f8[t] + f4[s];
                ops.summations += 1;
                double b = f8[t] - f4[s];
                ops.summations += 1;
                entries[k++] = {std::fabs(a), a < 0.0, 0, u3, u5, u6};
                entries[k++] = {std::fabs(b), b < 0.0, 1, u3, u5, u6};
            }
    for (int i = 1; i < 16; ++i) {
        Entry key = entries[i];
        int j = i - 1;
        while (j >= 0) {
            ops.comparisons += 1;
            if (entries[j].mag < key.mag) {
                entries[j + 1] = entries[j];
                --j;
            } else {
                break;
            }
        }
        entries[j + 1] = key;
    }

    std::array<Stage1Path, 32> out;
    for (int idx = 0; idx < 32; ++idx) {
        const Entry& e = (idx < 16) ? entries[idx] : entries[31 - idx];
        std::uint8_t flip = idx < 16 ? 0 : 1;
        std::uint8_t s1 = static_cast<std::uint8_t>(e.neg ^ flip);
        std::uint8_t s2 = static_cast<std::uint8_t>(e.neg ^ (e.type == 1 ? 1 : 0) ^ flip);
        Stage1Path& p = out[idx];
        p.u_first = {0, 0, 0, e.u3, 0, e.u5, e.u6,
                     static_cast<std::uint8_t>(e.u3 ^ e.u5 ^ e.u6 ^ s1)};
        p.u_second = {0, e.u3, e.u5, static_cast<std::uint8_t>(e.u3 ^ e.u5 ^ s2)};
        p.r = flip ? -e.mag : e.mag;
    }
    return out;
}

struct Stage2Result {
    bool improved = false;      // found a completion beating r_max
    bool shortcut_hit = false;  // hard decisions formed a valid codeword
    double best = -std::numeric_limits<double>::infinity();  // running best on exit
    std::array<std::uint8_t, 24> u{};                        // symbols when improved
    std::size_t candidates_scored = 0;
};

// Complete one stage-1 hypothesis.  r_max is the best full score seen so far
// (-infinity when no completion exists yet); the threshold keeps updating
// within the call as candidates complete, and the candidate loop aborts as
// soon as an upper bound rho falls below it.  With shortcut enabled, the hard
// decisions of the second-branch soft values are tested against the freezing
// constraints first; a hit is an exact completion with score r, and nothing
// ranked later can beat it.
inline Stage2Result stage2_extend(const Stage1Path& p, const LlrVector& y, double r_max,
                                  OpCounter& ops, bool prune = true, bool shortcut = false) {
    const double* l = y.data();
    const std::uint8_t u3 = p.u_first[3], u5 = p.u_first[5], u6 = p.u_first[6],
                       u7 = p.u_first[7], u19 = p.u_second[3];
    const std::uint8_t u9 = static_cast<std::uint8_t>(u3 ^ u5 ^ u6 ^ u19);
    const std::uint8_t u20 = u9;

    Stage2Result out;
    out.best = r_max;

    BitVector c1b = half_partial_sums({0, u3, u5, u19}, 3);
    std::array<double, 4> zt;
    for (int t = 0; t < 4; ++t) zt[t] = g_step(l[16 + 2 * t], l[17 + 2 * t], c1b[t], ops);

    std::array<double, 8> za;
    bool have_za = false;
    double sum_abs_za = 0.0;
    bool have_sum_za = false;

    if (shortcut) {
        BitVector c1a = half_partial_sums({0, 0, 0, u3, 0, u5, u6, u7}, 4);
        for (int t = 0; t < 8; ++t) za[t] = g_step(l[2 * t], l[2 * t + 1], c1a[t], ops);
        have_za = true;
        ops.comparisons += 12;
        std::uint32_t hb2 = 0, ha3 = 0;
        for (int t = 0; t < 4; ++t)
            if (zt[t] < 0.0) hb2 ^= detail::a2_row_masks()[t];
        for (int t = 0; t < 8; ++t)
            if (za[t] < 0.0) ha3 ^= detail::a3_row_masks()[t];
        std::array<std::uint8_t, 24> u{};
        u[3] = u3;
        u[5] = u5;
        u[6] = u6;
        u[7] = u7;
        u[17] = u3;
        u[18] = u5;
        u[19] = u19;
        for (int t = 0; t < 8; ++t) u[8 + t] = static_cast<std::uint8_t>((ha3 >> t) & 1);
        for (int t = 0; t < 4; ++t) u[20 + t] = static_cast<std::uint8_t>((hb2 >> t) & 1);
        if (detail::satisfies_constraints(u)) {
            out.improved = true;
            out.shortcut_hit = true;
            out.best = p.r;
            out.u = u;
            return out;
        }
    }

    double sum_abs_zt = 0.0;
    for (int t = 0; t < 4; ++t) {
        sum_abs_zt += std::fabs(zt[t]);
        ops.summations += 1;
    }
    if (u20) zt[0] = -zt[0];
    fht_inplace(zt.data(), 4, ops);  // zt now holds the coset correlations
    double rbase = p.r - sum_abs_zt;
    ops.summations += 1;

    struct Cand {
        double rho;
        std::uint8_t u21, u22, u23;
    };
    std::array<Cand, 4> cands;
    int k = 0;
    for (std::uint8_t u21 = 0; u21 < 2; ++u21)
        for (std::uint8_t u22 = 0; u22 < 2; ++u22) {
            int t2 = u21 + 2 * u22;
            double cv = std::fabs(zt[t2]);
            ops.comparisons += 1;
            std::uint8_t u23 =
                static_cast<std::uint8_t>(u21 ^ u22 ^ (zt[t2] < 0.0 ? 1 : 0));
            double rho = rbase + cv;
            ops.summations += 1;
            cands[k++] = {rho, u21, u22, u23};
        }
    for (int i = 1; i < 4; ++i) {
        Cand key = cands[i];
        int j = i - 1;
        while (j >= 0) {
            ops.comparisons += 1;
            if (cands[j].rho < key.rho) {
                cands[j + 1] = cands[j];
                --j;
            } else {
                break;
            }
        }
        cands[j + 1] = key;
    }

    double best = r_max;
    bool have = std::isfinite(r_max);
    for (const Cand& cd : cands) {
        if (have) {
            ops.comparisons += 1;
            if (prune && cd.rho < best) break;
        }
        out.candidates_scored += 1;
        if (!have_za) {
            BitVector c1a = half_partial_sums({0, 0, 0, u3, 0, u5, u6, u7}, 4);
            for (int t = 0; t < 8; ++t) za[t] = g_step(l[2 * t], l[2 * t + 1], c1a[t], ops);
            have_za = true;
        }
        if (!have_sum_za) {
            sum_abs_za = 0.0;
            for (int t = 0; t < 8; ++t) {
                sum_abs_za += std::fabs(za[t]);
                ops.summations += 1;
            }
            have_sum_za = true;
        }
        std::uint8_t u10 = static_cast<std::uint8_t>(u3 ^ u5 ^ cd.u21);
        std::uint8_t u12 = static_cast<std::uint8_t>(u3 ^ cd.u22);
        std::uint32_t coset = 0;
        if (u9) coset ^= detail::a3_row_masks()[1];
        if (u10) coset ^= detail::a3_row_masks()[2];
        if (u12) coset ^= detail::a3_row_masks()[4];
        std::array<double, 8> zc;
        for (int t = 0; t < 8; ++t) zc[t] = ((coset >> t) & 1) ? -za[t] : za[t];
        fht_inplace(zc.data(), 8, ops);
        int t_star = 0;
        double best_mag = std::fabs(zc[0]);
        for (int t = 1; t < 8; ++t) {
            ops.comparisons += 1;
            if (std::fabs(zc[t]) > best_mag) {
                best_mag = std::fabs(zc[t]);
                t_star = t;
            }
        }
        ops.comparisons += 1;
        std::uint8_t sign_bit = zc[t_star] < 0.0 ? 1 : 0;
        double final_score = cd.rho - sum_abs_za;
        ops.summations += 1;
        final_score += best_mag;
        ops.summations += 1;
        ops.comparisons += 1;
        if (final_score > best) {
            best = final_score;
            have = true;
            out.improved = true;
            out.u = detail::assemble_symbols(u3, u5, u6, u7, u19, u9, cd.u21, cd.u22, cd.u23,
                                             t_star, sign_bit);
        }
    }
    out.best = best;
    return out;
}

struct BlockStats {
    std::size_t stage2_paths = 0;       // stage-1 hypotheses actually extended
    std::size_t stage2_candidates = 0;  // completions fully scored
    std::size_t shortcut_hits = 0;
};

// Two-stage block decoder.  Always returns the maximum-correlation codeword;
// the shortcut and pruning flags change only the work performed.
inline DecodeResult block_decode(const LlrVector& y, bool shortcut = false,
                                 BlockStats* stats_out = nullptr, bool prune = true) {
    OpCounter ops;
    std::array<Stage1Path, 32> paths = stage1_enumerate(y, ops);

    constexpr double kNoScore = -std::numeric_limits<double>::infinity();
    double best = kNoScore;
    bool have = false;
    std::array<std::uint8_t, 24> best_u{};
    BlockStats st;

    for (const Stage1Path& p : paths) {
        if (have) {
            ops.comparisons += 1;
            if (prune && p.r < best) break;
        }
        st.stage2_paths += 1;
        Stage2Result res = stage2_extend(p, y, have ? best : kNoScore, ops, prune, shortcut);
        st.stage2_candidates += res.candidates_scored;
        if (res.improved) {
            best = res.best;
            best_u = res.u;
            have = true;
        }
        if (res.shortcut_hit) {
            st.shortcut_hits += 1;
            break;  // exact completion; nothing ranked later can beat it
        }
    }

    const CodeSpec& spec = golay_spec();
    DecodeResult out;
    std::vector<std::uint8_t> u(best_u.begin(), best_u.end());
    out.codeword = apply_mixed_transform(u, spec.segment_sizes);
    out.info = detail::extract_info(spec, u);
    out.score = -min_sum_energy(out.codeword, y.data());
    out.ops = ops;
    if (stats_out) *stats_out = st;
    return out;
}

}  // namespace golay24
