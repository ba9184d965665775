#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "golay24/fixtures.hpp"
#include "golay24/gf2.hpp"

namespace golay24 {

struct ComponentCode {
    BitMatrix generator;  // 4x8
    BitMatrix check;      // equal to generator: the components are self-dual
};

inline std::pair<ComponentCode, ComponentCode> build_component_codes() {
    BitMatrix gp = matrix_from_text(fixtures::kComponentPrimeText);
    BitMatrix gpp = matrix_from_text(fixtures::kComponentDoublePrimeText);
    return {ComponentCode{gp, gp}, ComponentCode{gpp, gpp}};
}

inline std::set<std::uint32_t> span_words(const BitMatrix& g) {
    std::set<std::uint32_t> out;
    std::size_t n = g.rows;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::uint32_t w = 0;
        for (std::size_t r = 0; r < n; ++r)
            if (mask & (1u << r))
                for (std::size_t c = 0; c < g.cols; ++c)
                    w ^= static_cast<std::uint32_t>(g.at(r, c)) << c;
        out.insert(w);
    }
    return out;
}

// Assemble the 12x24 generator from the two length-8 components:
// rows (v,0,v) and (0,w,w) over the first component, rows (u,u,u) over the
// second.  Component columns are labeled by field elements in the order
// (0, a^0, ..., a^6) and are first rearranged into standard bit order;
// without that step the assembled span is a different code.
inline BitMatrix turyn_construct(const ComponentCode& c_prime, const ComponentCode& c_double_prime) {
    auto sp = span_words(c_prime.generator);
    auto spp = span_words(c_double_prime.generator);
    std::vector<std::uint32_t> inter;
    std::set_intersection(sp.begin(), sp.end(), spp.begin(), spp.end(), std::back_inserter(inter));
    if (inter != std::vector<std::uint32_t>{0x00u, 0xFFu})
        throw std::invalid_argument("turyn_construct: components must intersect in {0, all-ones}");

    auto reorder = [](const BitMatrix& m) {
        BitMatrix out(m.rows, m.cols);
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t c = 0; c < m.cols; ++c)
                out.at(r, c) = m.at(r, fixtures::kColumnOrder[c]);
        return out;
    };
    BitMatrix gp = reorder(c_prime.generator);
    BitMatrix gpp = reorder(c_double_prime.generator);

    BitMatrix g(12, 24);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            g.at(r, c) = gp.at(r, c);       // (v, 0, v)
            g.at(r, 16 + c) = gp.at(r, c);
            g.at(4 + r, 8 + c) = gp.at(r, c);   // (0, w, w)
            g.at(4 + r, 16 + c) = gp.at(r, c);
            g.at(8 + r, c) = gpp.at(r, c);      // (u, u, u)
            g.at(8 + r, 8 + c) = gpp.at(r, c);
            g.at(8 + r, 16 + c) = gpp.at(r, c);
        }
    return g;
}

struct CodeSpec {
    std::size_t n = 24;
    std::size_t k = 12;
    std::vector<int> segment_sizes;           // exponents: lengths 2^m
    BitMatrix v;                              // 12x24 constraint matrix
    ConstraintSet cs;
    std::vector<std::size_t> schedule;
    std::vector<std::size_t> info_positions;  // increasing
};

// Schedule construction.  Within a segment the decoder can only visit
// phases in order, so the candidates at each step are the next unscheduled
// position of each segment.  Among those, emit the best by class then
// index.  Classes: 0 = frozen with at least one dependency, all
// dependencies scheduled; 1 = frozen with no dependencies; 2 = information
// symbol.  A frozen head with unscheduled dependencies blocks its segment.
inline std::vector<std::size_t> greedy_schedule(const ConstraintSet& cs,
                                                const std::vector<int>& segment_sizes) {
    std::vector<std::size_t> starts, lens;
    std::size_t n = 0;
    for (int m : segment_sizes) {
        starts.push_back(n);
        lens.push_back(std::size_t{1} << m);
        n += std::size_t{1} << m;
    }
    std::vector<bool> done(n, false);
    std::vector<std::size_t> head(segment_sizes.size(), 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    while (order.size() < n) {
        int best_class = 3;
        std::size_t best = n;
        for (std::size_t s = 0; s < head.size(); ++s) {
            if (head[s] >= lens[s]) continue;
            std::size_t i = starts[s] + head[s];
            int cls;
            if (cs.is_frozen(i)) {
                const auto& deps = cs.constraints.at(i);
                bool ready = std::all_of(deps.begin(), deps.end(),
                                         [&](std::size_t j) { return done[j]; });
                if (!ready) continue;
                cls = deps.empty() ? 1 : 0;
            } else {
                cls = 2;
            }
            if (cls < best_class || (cls == best_class && i < best)) {
                best_class = cls;
                best = i;
            }
        }
        if (best == n) throw std::logic_error("greedy_schedule: all segment heads blocked");
        done[best] = true;
        order.push_back(best);
        for (std::size_t s = 0; s < head.size(); ++s)
            if (head[s] < lens[s] && starts[s] + head[s] == best) head[s] += 1;
    }
    return order;
}

inline const CodeSpec& golay_spec() {
    static const CodeSpec spec = [] {
        CodeSpec s;
        s.segment_sizes = {4, 3};
        s.v = matrix_from_text(fixtures::kConstraintMatrixText);
        for (std::size_t r = 0; r < s.v.rows; ++r) {
            BitVector row = s.v.row(r);
            int lc = last_nonzero(row);
            std::size_t i = static_cast<std::size_t>(lc);
            s.cs.frozen_set.push_back(i);
            std::vector<std::size_t> deps;
            for (std::size_t j = 0; j < i; ++j)
                if (row[j]) deps.push_back(j);
            s.cs.constraints[i] = std::move(deps);
        }
        std::sort(s.cs.frozen_set.begin(), s.cs.frozen_set.end());
        s.schedule.assign(fixtures::kSchedule.begin(), fixtures::kSchedule.end());
        s.info_positions.assign(fixtures::kInfoPositions.begin(), fixtures::kInfoPositions.end());
        return s;
    }();
    return spec;
}

inline BitVector encode(const BitVector& info, const CodeSpec& spec) {
    if (info.size() != spec.k) throw std::invalid_argument("encode: info length mismatch");
    BitVector u(spec.n, 0);
    for (std::size_t k = 0; k < spec.info_positions.size(); ++k) u[spec.info_positions[k]] = info[k];
    for (std::size_t pos : spec.schedule) {
        auto it = spec.cs.constraints.find(pos);
        if (it == spec.cs.constraints.end()) continue;
        std::uint8_t b = 0;
        for (std::size_t j : it->second) b ^= u[j];
        u[pos] = b;
    }
    return apply_mixed_transform(u, spec.segment_sizes);
}

}  // namespace golay24
