#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <queue>
#include <stdexcept>
#include <vector>

#include "golay24/gf2.hpp"
#include "golay24/golay.hpp"
#include "golay24/op_counter.hpp"

namespace golay24 {

using LlrVector = std::array<double, 24>;

// Counted primitives.  Signs are read with (x < 0.0), so an exact zero acts
// as positive everywhere; this keeps min-sum scores consistent across the
// tree decoders, the block decoder and the exhaustive reference.
inline double boxplus(double a, double b, OpCounter& ops) {
    ops.comparisons += 1;
    double mag = std::min(std::fabs(a), std::fabs(b));
    return ((a < 0.0) != (b < 0.0)) ? -mag : mag;
}

inline double g_step(double a, double b, std::uint8_t u, OpCounter& ops) {
    ops.summations += 1;
    return u ? (b - a) : (b + a);
}

// Score update for deciding symbol value u against soft value llr: no cost
// when the sign agrees, otherwise the magnitude is charged as a penalty.
inline void tau_update(double& score, double llr, std::uint8_t u, OpCounter& ops) {
    ops.comparisons += 1;
    bool neg = (llr < 0.0);
    if ((u != 0) != neg) {
        score += neg ? llr : -llr;
        ops.summations += 1;
    }
}

// Min-sum energy of a candidate codeword: total magnitude on positions whose
// hard decision disagrees.  Used for reporting and cross-checks; not counted.
inline double min_sum_energy(const BitVector& codeword, const double* llrs) {
    double e = 0.0;
    for (std::size_t j = 0; j < codeword.size(); ++j) {
        bool neg = (llrs[j] < 0.0);
        if ((codeword[j] != 0) != neg) e += std::fabs(llrs[j]);
    }
    return e;
}

// Successive cancellation over one length-2^m polarized segment.  Layer 0
// holds the channel values; decisions happen at layer m, one phase at a
// time.  Partial mod-2 sums propagate back down on odd phases, so after the
// final phase layer 0 carries the codeword and after phase 2^(m-1) layer 1
// carries the half-length partial sums.
class SegmentDecoder {
public:
    SegmentDecoder(int m, const double* llrs) : m_(m) {
        p_.resize(m + 1);
        c_.resize(m + 1);
        for (int l = 0; l <= m; ++l) {
            std::size_t width = std::size_t{1} << (m - l);
            p_[l].assign(width, 0.0);
            c_[l].assign(width, {0, 0});
        }
        std::copy(llrs, llrs + (std::size_t{1} << m), p_[0].begin());
    }

    int order() const { return m_; }
    std::size_t phase() const { return phase_; }

    double llr(std::size_t phi, OpCounter& ops) {
        if (phi != phase_)
            throw std::logic_error("SegmentDecoder::llr: phases must be visited in order");
        calc_p(m_, phi, ops);
        return p_[m_][0];
    }

    void feed(std::uint8_t bit) {
        c_[m_][0][phase_ & 1] = bit;
        if (phase_ & 1) update_c(m_, phase_);
        ++phase_;
    }

    // Valid once all 2^m phases have been fed.
    std::uint8_t codeword_bit(std::size_t beta) const { return c_[0][beta][0]; }

    // Valid once the first 2^(m-1) phases have been fed.
    std::uint8_t partial_sum_bit(std::size_t beta) const { return c_[1][beta][0]; }

private:
    void calc_p(int lambda, std::size_t phi, OpCounter& ops) {
        if (lambda == 0) return;
        if ((phi & 1) == 0) calc_p(lambda - 1, phi >> 1, ops);
        std::size_t width = std::size_t{1} << (m_ - lambda);
        for (std::size_t beta = 0; beta < width; ++beta) {
            double a = p_[lambda - 1][2 * beta];
            double b = p_[lambda - 1][2 * beta + 1];
            p_[lambda][beta] = (phi & 1) ? g_step(a, b, c_[lambda][beta][0], ops)
                                         : boxplus(a, b, ops);
        }
    }

    void update_c(int lambda, std::size_t phi) {
        std::size_t psi = phi >> 1;
        std::size_t width = std::size_t{1} << (m_ - lambda);
        for (std::size_t beta = 0; beta < width; ++beta) {
            c_[lambda - 1][2 * beta][psi & 1] =
                static_cast<std::uint8_t>(c_[lambda][beta][0] ^ c_[lambda][beta][1]);
            c_[lambda - 1][2 * beta + 1][psi & 1] = c_[lambda][beta][1];
        }
        if ((psi & 1) == 1 && lambda > 1) update_c(lambda - 1, psi);
    }

    int m_;
    std::size_t phase_ = 0;
    std::vector<std::vector<double>> p_;
    std::vector<std::vector<std::array<std::uint8_t, 2>>> c_;
};

// Layer-1 partial sums after feeding the first 2^(m-1) symbols, obtained by
// pushing the bits through the same update machinery the decoders use.  The
// closed form (transform of the fed half) is asserted against this in tests.
inline BitVector half_partial_sums(const BitVector& half_bits, int m) {
    if (half_bits.size() != (std::size_t{1} << (m - 1)))
        throw std::invalid_argument("half_partial_sums: need exactly 2^(m-1) bits");
    std::vector<double> zeros(std::size_t{1} << m, 0.0);
    SegmentDecoder seg(m, zeros.data());
    for (std::uint8_t b : half_bits) seg.feed(b);
    BitVector out(half_bits.size());
    for (std::size_t beta = 0; beta < out.size(); ++beta) out[beta] = seg.partial_sum_bit(beta);
    return out;
}

// One hypothesis over the chained code: per-segment decoders plus the
// decided symbols and the running score.
struct DecoderPath {
    std::vector<SegmentDecoder> segments;
    std::vector<std::size_t> offsets;  // global position of each segment start
    std::vector<std::uint8_t> u;
    double score = 0.0;
    std::size_t step = 0;       // index into the schedule
    std::uint8_t last_bit = 0;  // value of the most recently decided symbol
    std::uint64_t seq = 0;      // creation order, used as a final tiebreak

    DecoderPath(const double* llrs, const std::vector<int>& segment_sizes) {
        std::size_t off = 0;
        for (int m : segment_sizes) {
            segments.emplace_back(m, llrs + off);
            offsets.push_back(off);
            off += std::size_t{1} << m;
        }
        u.assign(off, 0);
    }

    std::pair<std::size_t, std::size_t> locate(std::size_t pos) const {
        for (std::size_t s = segments.size(); s-- > 0;)
            if (pos >= offsets[s]) return {s, pos - offsets[s]};
        throw std::out_of_range("DecoderPath::locate");
    }

    BitVector codeword() const {
        BitVector c(u.size(), 0);
        for (std::size_t s = 0; s < segments.size(); ++s) {
            std::size_t len = std::size_t{1} << segments[s].order();
            for (std::size_t beta = 0; beta < len; ++beta)
                c[offsets[s] + beta] = segments[s].codeword_bit(beta);
        }
        return c;
    }
};

inline double segment_llr(DecoderPath& path, std::size_t segment_index, std::size_t local_phase,
                          OpCounter& ops) {
    if (segment_index >= path.segments.size())
        throw std::out_of_range("segment_llr: no such segment");
    return path.segments[segment_index].llr(local_phase, ops);
}

struct DecodeResult {
    BitVector codeword;
    BitVector info;
    double score = 0.0;
    OpCounter ops;        // operations of the whole decode call
    bool fallback = false;  // sequential decoder ran out of budget
};

namespace detail {

inline std::uint8_t forced_bit(const CodeSpec& spec, const std::vector<std::uint8_t>& u,
                               std::size_t pos) {
    std::uint8_t b = 0;
    for (std::size_t j : spec.cs.constraints.at(pos)) b ^= u[j];
    return b;
}

inline BitVector extract_info(const CodeSpec& spec, const std::vector<std::uint8_t>& u) {
    BitVector info(spec.k);
    for (std::size_t k = 0; k < spec.k; ++k) info[k] = u[spec.info_positions[k]];
    return info;
}

inline DecodeResult finish_path(const CodeSpec& spec, const DecoderPath& path,
                                const OpCounter& ops, bool fallback = false) {
    DecodeResult r;
    r.codeword = path.codeword();
    r.info = extract_info(spec, path.u);
    r.score = path.score;
    r.ops = ops;
    r.fallback = fallback;
    return r;
}

// Decide one schedule entry on one path.  Frozen symbols are forced; for
// information symbols the caller supplies the bit.
inline void advance(DecoderPath& path, const CodeSpec& spec, double llr, std::uint8_t bit,
                    OpCounter& ops) {
    std::size_t pos = spec.schedule[path.step];
    auto [s, phi] = path.locate(pos);
    (void)phi;
    tau_update(path.score, llr, bit, ops);
    path.segments[s].feed(bit);
    path.u[pos] = bit;
    path.last_bit = bit;
    path.step += 1;
}

}  // namespace detail

// List decoding: every path decides the schedule in lockstep; information
// symbols fork each path and the population is cut back to the best
// list_size by score.  The cut is placed just before the next fork (and once
// at the end), never in the middle of a frozen stretch: the penalties of the
// frozen symbols that follow a fork re-rank the population, and cutting
// before they land would discard paths on incomplete scores.  Ties keep the
// path whose newest symbol is 0, then older paths.  Returns surviving paths
// best first; every result reports the operation totals of the whole call.
inline std::vector<DecodeResult> list_decode(const LlrVector& y, const CodeSpec& spec,
                                             std::size_t list_size) {
    if (list_size == 0) throw std::invalid_argument("list_decode: list size must be positive");
    OpCounter ops;
    std::vector<DecoderPath> paths;
    paths.emplace_back(y.data(), spec.segment_sizes);
    std::uint64_t next_seq = 1;

    auto cut = [&]() {
        std::stable_sort(paths.begin(), paths.end(),
                         [&ops](const DecoderPath& a, const DecoderPath& b) {
                             ops.comparisons += 1;
                             return a.score > b.score;
                         });
        if (paths.size() > list_size)
            paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(list_size), paths.end());
    };

    for (std::size_t step = 0; step < spec.schedule.size(); ++step) {
        std::size_t pos = spec.schedule[step];
        if (spec.cs.is_frozen(pos)) {
            for (auto& p : paths) {
                auto [s, phi] = p.locate(pos);
                double llr = p.segments[s].llr(phi, ops);
                detail::advance(p, spec, llr, detail::forced_bit(spec, p.u, pos), ops);
            }
            continue;
        }
        cut();
        std::vector<DecoderPath> zeros, ones;
        zeros.reserve(paths.size());
        ones.reserve(paths.size());
        for (auto& p : paths) {
            auto [s, phi] = p.locate(pos);
            double llr = p.segments[s].llr(phi, ops);
            DecoderPath clone = p;
            clone.seq = next_seq++;
            detail::advance(p, spec, llr, 0, ops);
            detail::advance(clone, spec, llr, 1, ops);
            zeros.push_back(std::move(p));
            ones.push_back(std::move(clone));
        }
        paths.clear();
        for (auto& p : zeros) paths.push_back(std::move(p));
        for (auto& p : ones) paths.push_back(std::move(p));
    }
    cut();

    std::vector<DecodeResult> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(detail::finish_path(spec, p, OpCounter{}));
    for (auto& r : out) r.ops = ops;
    return out;
}

// Stack decoding: a priority queue ordered by score expands the current best
// path; at most list_size paths may fork at any information symbol, while
// frozen symbols extend freely so their penalties land before a path is
// judged (pops at a fixed step happen in descending score order, so the cap
// keeps exactly the paths the list decoder's cut would).  The first completed
// path popped is the answer.  If the expansion budget runs out the deepest
// path so far is completed greedily and flagged.
inline DecodeResult sequential_decode(const LlrVector& y, const CodeSpec& spec,
                                      std::size_t list_size, std::size_t max_paths = 4096) {
    if (list_size == 0)
        throw std::invalid_argument("sequential_decode: list size must be positive");
    OpCounter ops;
    std::vector<std::unique_ptr<DecoderPath>> pool;
    pool.push_back(std::make_unique<DecoderPath>(y.data(), spec.segment_sizes));
    std::uint64_t next_seq = 1;

    auto worse = [&ops](const DecoderPath* a, const DecoderPath* b) {
        ops.comparisons += 1;
        if (a->score != b->score) return a->score < b->score;
        if (a->last_bit != b->last_bit) return a->last_bit > b->last_bit;
        return a->seq > b->seq;
    };
    std::priority_queue<DecoderPath*, std::vector<DecoderPath*>, decltype(worse)> queue(worse);
    queue.push(pool.back().get());

    std::vector<std::size_t> visits(spec.schedule.size(), 0);
    std::size_t expansions = 0;

    while (!queue.empty()) {
        DecoderPath* p = queue.top();
        queue.pop();
        if (p->step == spec.schedule.size()) return detail::finish_path(spec, *p, ops);

        std::size_t pos = spec.schedule[p->step];
        if (spec.cs.is_frozen(pos)) {
            auto [s, phi] = p->locate(pos);
            double llr = p->segments[s].llr(phi, ops);
            detail::advance(*p, spec, llr, detail::forced_bit(spec, p->u, pos), ops);
            queue.push(p);
        } else {
            if (visits[p->step] >= list_size) continue;
            visits[p->step] += 1;
            auto [s, phi] = p->locate(pos);
            double llr = p->segments[s].llr(phi, ops);
            pool.push_back(std::make_unique<DecoderPath>(*p));
            DecoderPath* clone = pool.back().get();
            clone->seq = next_seq++;
            detail::advance(*p, spec, llr, 0, ops);
            detail::advance(*clone, spec, llr, 1, ops);
            queue.push(p);
            queue.push(clone);
        }
        expansions += 1;
        if (expansions >= max_paths) break;
    }

    // Budget exhausted: finish the deepest path greedily.
    DecoderPath* best = nullptr;
    for (const auto& up : pool) {
        DecoderPath* q = up.get();
        if (!best || q->step > best->step ||
            (q->step == best->step &&
             (q->score > best->score ||
              (q->score == best->score && (q->last_bit < best->last_bit ||
                                           (q->last_bit == best->last_bit && q->seq < best->seq))))))
            best = q;
    }
    while (best->step < spec.schedule.size()) {
        std::size_t pos = spec.schedule[best->step];
        auto [s, phi] = best->locate(pos);
        double llr = best->segments[s].llr(phi, ops);
        std::uint8_t bit;
        if (spec.cs.is_frozen(pos)) {
            bit = detail::forced_bit(spec, best->u, pos);
        } else {
            ops.comparisons += 1;
            bit = (llr < 0.0) ? 1 : 0;
        }
        detail::advance(*best, spec, llr, bit, ops);
    }
    return detail::finish_path(spec, *best, ops, true);
}

// Feeds an arbitrary symbol vector through the path machinery and returns
// (accumulated score, min-sum energy of the mapped codeword).  These must
// satisfy score == -energy for every input.
inline std::pair<double, double> path_score_identity_check(const BitVector& u, const LlrVector& y,
                                                           const CodeSpec& spec) {
    if (u.size() != spec.n) throw std::invalid_argument("path_score_identity_check: bad length");
    OpCounter ops;
    DecoderPath path(y.data(), spec.segment_sizes);
    for (std::size_t pos : spec.schedule) {
        auto [s, phi] = path.locate(pos);
        double llr = path.segments[s].llr(phi, ops);
        detail::advance(path, spec, llr, u[pos], ops);
    }
    double energy = min_sum_energy(path.codeword(), y.data());
    return {path.score, energy};
}

}  // namespace golay24
