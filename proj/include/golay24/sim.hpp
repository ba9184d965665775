#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "golay24/block.hpp"
#include "golay24/channel.hpp"
#include "golay24/golay.hpp"
#include "golay24/oracle.hpp"
#include "golay24/sc.hpp"

namespace golay24 {

enum class DecoderKind { Sc, List, Sequential, Block, BlockShortcut, Ml };

inline DecoderKind decoder_from_name(const std::string& name) {
    if (name == "sc") return DecoderKind::Sc;
    if (name == "list") return DecoderKind::List;
    if (name == "seq" || name == "sequential") return DecoderKind::Sequential;
    if (name == "block") return DecoderKind::Block;
    if (name == "block+shortcut" || name == "shortcut") return DecoderKind::BlockShortcut;
    if (name == "ml") return DecoderKind::Ml;
    throw std::invalid_argument("unknown decoder name: " + name);
}

struct StopRule {
    std::uint64_t min_frames = 100000;
    std::uint64_t min_errors = 200;       // continue until BOTH minima are met...
    std::uint64_t max_frames = 10000000;  // ...or this many frames, whichever first
};

struct SimRecord {
    double eb_n0_db = 0.0;
    std::uint64_t frames_run = 0;
    std::uint64_t frame_errors = 0;
    double fer = 0.0;
    double avg_summations = 0.0;
    double avg_comparisons = 0.0;
    std::uint64_t max_total_ops = 0;
    double ml_agreement_rate = 0.0;
};

struct RunOptions {
    std::size_t list_size = 16;
    std::size_t max_paths = 4096;  // sequential decoder expansion budget
    bool all_zero = false;         // transmit the all-zero codeword instead of random info
    int workers = 1;
    std::uint64_t batch_size = 10000;
    std::function<void(const SimRecord&)> progress;  // called after each accepted batch
};

namespace detail {

struct BatchTally {
    std::uint64_t frames = 0;
    std::uint64_t errors = 0;
    std::uint64_t agreements = 0;
    std::uint64_t sum_summations = 0;
    std::uint64_t sum_comparisons = 0;
    std::uint64_t max_total_ops = 0;
};

inline BatchTally run_batch(const CodeSpec& spec, DecoderKind decoder, const ChannelConfig& cfg,
                            std::uint64_t subseed, std::uint64_t first_frame,
                            std::uint64_t frame_count, const RunOptions& opt) {
    BatchTally tally;
    MlOracle oracle;
    for (std::uint64_t k = 0; k < frame_count; ++k) {
        std::uint64_t frame = first_frame + k;
        FrameRng rng(subseed, frame);
        std::uint32_t info_word = opt.all_zero ? 0u : rng.info_word();
        BitVector info(12);
        for (int b = 0; b < 12; ++b) info[b] = (info_word >> b) & 1u;
        BitVector sent = encode(info, spec);
        LlrVector y = modulate_and_transmit(sent, cfg, rng);

        oracle.build(y);
        MlOracle::Best ml_best = oracle.best();

        DecodeResult res;
        switch (decoder) {
            case DecoderKind::Sc:
                res = std::move(list_decode(y, spec, 1).front());
                break;
            case DecoderKind::List:
                res = std::move(list_decode(y, spec, opt.list_size).front());
                break;
            case DecoderKind::Sequential:
                res = sequential_decode(y, spec, opt.list_size, opt.max_paths);
                break;
            case DecoderKind::Block:
                res = block_decode(y, false);
                break;
            case DecoderKind::BlockShortcut:
                res = block_decode(y, true);
                break;
            case DecoderKind::Ml:
                res = ml_decode(y);
                break;
        }

        tally.frames += 1;
        if (res.codeword != sent) tally.errors += 1;
        // Same-table correlation comparison; exact ties count as agreement.
        double got = oracle.corr(word_of(res.codeword));
        if (ml_best.corr - got <= 1e-9 * (1.0 + std::fabs(ml_best.corr))) tally.agreements += 1;
        tally.sum_summations += res.ops.summations;
        tally.sum_comparisons += res.ops.comparisons;
        tally.max_total_ops = std::max(tally.max_total_ops, res.ops.total());
    }
    return tally;
}

}  // namespace detail

// Monte-Carlo FER/complexity measurement.  Frames are seeded by
// (per-SNR subseed, frame index), batches are accumulated in index order,
// and the stop rule is evaluated at batch boundaries only, so results are
// bit-identical for a fixed seed regardless of worker count.
inline std::vector<SimRecord> run_fer(const CodeSpec& spec, DecoderKind decoder,
                                      const std::vector<double>& snr_list, const StopRule& stop,
                                      std::uint64_t seed, const RunOptions& opt = {}) {
    if (stop.max_frames == 0) throw std::invalid_argument("run_fer: max_frames must be positive");
    if (opt.batch_size == 0) throw std::invalid_argument("run_fer: batch size must be positive");
    int workers = std::max(1, opt.workers);

    std::vector<SimRecord> records;
    for (std::size_t si = 0; si < snr_list.size(); ++si) {
        ChannelConfig cfg;
        cfg.eb_n0_db = snr_list[si];
        cfg.seed = seed;
        std::uint64_t subseed = mix_seed(seed, 0x536E7200ull + si);

        detail::BatchTally total;
        std::uint64_t next_frame = 0;
        bool done = false;
        while (!done) {
            // One wave of batches, computed possibly in parallel, then folded
            // sequentially so the stop decision is worker-count independent.
            std::vector<std::uint64_t> starts, counts;
            std::uint64_t cursor = next_frame;
            for (int w = 0; w < workers && cursor < stop.max_frames; ++w) {
                std::uint64_t n = std::min<std::uint64_t>(opt.batch_size, stop.max_frames - cursor);
                starts.push_back(cursor);
                counts.push_back(n);
                cursor += n;
            }
            if (starts.empty()) break;

            std::vector<detail::BatchTally> tallies(starts.size());
            if (starts.size() == 1) {
                tallies[0] = detail::run_batch(spec, decoder, cfg, subseed, starts[0], counts[0], opt);
            } else {
                std::vector<std::thread> threads;
                for (std::size_t w = 0; w < starts.size(); ++w)
                    threads.emplace_back([&, w] {
                        tallies[w] = detail::run_batch(spec, decoder, cfg, subseed, starts[w],
                                                       counts[w], opt);
                    });
                for (auto& t : threads) t.join();
            }

            for (std::size_t w = 0; w < tallies.size() && !done; ++w) {
                const auto& t = tallies[w];
                total.frames += t.frames;
                total.errors += t.errors;
                total.agreements += t.agreements;
                total.sum_summations += t.sum_summations;
                total.sum_comparisons += t.sum_comparisons;
                total.max_total_ops = std::max(total.max_total_ops, t.max_total_ops);
                next_frame = starts[w] + counts[w];
                if ((total.frames >= stop.min_frames && total.errors >= stop.min_errors) ||
                    total.frames >= stop.max_frames)
                    done = true;
                if (opt.progress) {
                    SimRecord partial;
                    partial.eb_n0_db = cfg.eb_n0_db;
                    partial.frames_run = total.frames;
                    partial.frame_errors = total.errors;
                    opt.progress(partial);
                }
            }
        }

        SimRecord rec;
        rec.eb_n0_db = cfg.eb_n0_db;
        rec.frames_run = total.frames;
        rec.frame_errors = total.errors;
        rec.fer = total.frames ? static_cast<double>(total.errors) / total.frames : 0.0;
        rec.avg_summations = total.frames ? static_cast<double>(total.sum_summations) / total.frames : 0.0;
        rec.avg_comparisons =
            total.frames ? static_cast<double>(total.sum_comparisons) / total.frames : 0.0;
        rec.max_total_ops = total.max_total_ops;
        rec.ml_agreement_rate =
            total.frames ? static_cast<double>(total.agreements) / total.frames : 0.0;
        records.push_back(rec);
    }
    return records;
}

inline void write_csv(std::ostream& os, const std::vector<SimRecord>& records) {
    os << "eb_n0_db,frames,frame_errors,fer,avg_sums,avg_cmps,max_ops,ml_agreement\n";
    char line[256];
    for (const SimRecord& r : records) {
        std::snprintf(line, sizeof(line), "%.2f,%llu,%llu,%.6f,%.3f,%.3f,%llu,%.6f\n", r.eb_n0_db,
                      static_cast<unsigned long long>(r.frames_run),
                      static_cast<unsigned long long>(r.frame_errors), r.fer, r.avg_summations,
                      r.avg_comparisons, static_cast<unsigned long long>(r.max_total_ops),
                      r.ml_agreement_rate);
        os << line;
    }
}

}  // namespace golay24
