#pragma once

#include <cstdint>

namespace golay24 {

// Tallies the real-valued work a decoder performs. Convention: every
// floating-point add/subtract is one summation; every ordering test,
// min/max pick, pruning guard, sign-agreement test, and bit-deciding sign
// test is one comparison. Absolute values, negations, and pure bit
// operations are free. See README for the full site list.
struct OpCounter {
    std::uint64_t summations = 0;
    std::uint64_t comparisons = 0;

    std::uint64_t total() const { return summations + comparisons; }

    OpCounter& operator+=(const OpCounter& o) {
        summations += o.summations;
        comparisons += o.comparisons;
        return *this;
    }

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace golay24
