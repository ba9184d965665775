#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "golay24/op_counter.hpp"

namespace golay24 {

// In-place fast Hadamard transform.  Output index t holds the correlation
// sum_j (-1)^{<t,j>} z_j.  Costs exactly N*log2(N) summations.
inline void fht_inplace(double* z, std::size_t n, OpCounter& ops) {
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = z[j], b = z[j + h];
                z[j] = a + b;
                z[j + h] = a - b;
                ops.summations += 2;
            }
        }
    }
}

inline void fht(std::vector<double>& z, OpCounter& ops) {
    std::size_t n = z.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fht: length must be a power of two");
    fht_inplace(z.data(), n, ops);
}

// Reference correlations by direct evaluation, for checking fht().
inline std::vector<double> naive_correlations(const std::vector<double>& z) {
    std::size_t n = z.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t j = 0; j < n; ++j) {
            int bit = __builtin_popcount(static_cast<unsigned>(t & j)) & 1;
            out[t] += bit ? -z[j] : z[j];
        }
    return out;
}

// Correlation c = sum_j (-1)^{x_j} z_j relates to the soft weight
// W = sum_{j: x_j = 1} |z_j| (for z with matching signs) via
// W = (sum_j |z_j| - c) / 2.
inline double correlation_to_weight(double corr, const std::vector<double>& z) {
    double s = 0.0;
    for (double v : z) s += std::fabs(v);
    return 0.5 * (s - corr);
}

}  // namespace golay24
