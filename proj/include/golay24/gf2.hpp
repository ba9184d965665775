#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace golay24 {

using BitVector = std::vector<std::uint8_t>;

struct BitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data;  // row-major, one byte per bit

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint8_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    BitVector row(std::size_t r) const {
        return BitVector(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
                         data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    }

    void set_row(std::size_t r, const BitVector& v) {
        std::copy(v.begin(), v.end(), data.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

inline BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("gf2_matmul: dimension mismatch");
    BitMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            if (a.at(i, k))
                for (std::size_t j = 0; j < b.cols; ++j)
                    out.at(i, j) ^= b.at(k, j);
    return out;
}

inline std::vector<std::size_t> bit_reversal_perm(int m) {
    if (m < 0) throw std::invalid_argument("bit_reversal_perm: negative m");
    std::size_t n = std::size_t{1} << m;
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (int b = 0; b < m; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (m - 1 - b);
        p[i] = r;
    }
    return p;
}

// A_m = B_m * [[1,0],[1,1]]^(tensor m).  Closed form: entry (i,k) is 1 iff
// k is a bitwise subset of the bit-reversal of i.  Self-inverse over GF(2).
inline BitMatrix polarizing_transform(int m) {
    if (m < 0) throw std::invalid_argument("polarizing_transform: negative m");
    std::size_t n = std::size_t{1} << m;
    auto rev = bit_reversal_perm(m);
    BitMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if ((k & ~rev[i]) == 0) a.at(i, k) = 1;
    return a;
}

// Block-diagonal transform diag(A_{m_0}, ..., A_{m_{s-1}}) applied to u.
inline BitVector apply_mixed_transform(const BitVector& u, const std::vector<int>& segment_sizes) {
    std::size_t total = 0;
    for (int m : segment_sizes) total += std::size_t{1} << m;
    if (u.size() != total) throw std::invalid_argument("apply_mixed_transform: length mismatch");
    BitVector c(u.size(), 0);
    std::size_t off = 0;
    for (int m : segment_sizes) {
        std::size_t n = std::size_t{1} << m;
        BitMatrix a = polarizing_transform(m);
        for (std::size_t i = 0; i < n; ++i)
            if (u[off + i])
                for (std::size_t j = 0; j < n; ++j) c[off + j] ^= a.at(i, j);
        off += n;
    }
    return c;
}

inline BitMatrix mixed_transform_matrix(const std::vector<int>& segment_sizes) {
    std::size_t total = 0;
    for (int m : segment_sizes) total += std::size_t{1} << m;
    BitMatrix a(total, total);
    std::size_t off = 0;
    for (int m : segment_sizes) {
        BitMatrix blk = polarizing_transform(m);
        for (std::size_t i = 0; i < blk.rows; ++i)
            for (std::size_t j = 0; j < blk.cols; ++j) a.at(off + i, off + j) = blk.at(i, j);
        off += blk.rows;
    }
    return a;
}

// Frozen-position table: frozen_set lists the constrained input indices;
// constraints[i] holds the earlier indices j < i whose XOR forces u_i
// (empty list = static zero).
struct ConstraintSet {
    std::vector<std::size_t> frozen_set;
    std::map<std::size_t, std::vector<std::size_t>> constraints;

    bool is_frozen(std::size_t i) const { return constraints.count(i) != 0; }

    friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

inline int last_nonzero(const BitVector& v) {
    for (std::size_t j = v.size(); j-- > 0;)
        if (v[j]) return static_cast<int>(j);
    return -1;
}

inline std::size_t gf2_rank(BitMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows && !m.at(pivot, c)) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        for (std::size_t r = 0; r < m.rows; ++r)
            if (r != rank && m.at(r, c))
                for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) ^= m.at(rank, j);
        ++rank;
    }
    return rank;
}

inline BitMatrix stack_rows(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("stack_rows: column mismatch");
    BitMatrix out(a.rows + b.rows, a.cols);
    std::copy(a.data.begin(), a.data.end(), out.data.begin());
    std::copy(b.data.begin(), b.data.end(),
              out.data.begin() + static_cast<std::ptrdiff_t>(a.rows * a.cols));
    return out;
}

inline bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.cols) return false;
    std::size_t ra = gf2_rank(a), rb = gf2_rank(b);
    return ra == rb && gf2_rank(stack_rows(a, b)) == ra;
}

// Echelon form keyed on LAST nonzero column, processed right to left:
// insert each row, repeatedly reducing by the stored pivot row for its
// current last-nonzero column until the column is unclaimed.  The result's
// rows have pairwise distinct last-nonzero columns; those columns are the
// frozen set.
inline std::pair<BitMatrix, ConstraintSet>
normalize_constraints(const BitMatrix& h, const std::vector<int>& segment_sizes) {
    std::size_t total = 0;
    for (int m : segment_sizes) total += std::size_t{1} << m;
    if (h.cols != total) throw std::invalid_argument("normalize_constraints: column count mismatch");
    if (gf2_rank(h) != h.rows) throw std::invalid_argument("normalize_constraints: rank-deficient h");

    BitMatrix a = mixed_transform_matrix(segment_sizes);
    BitMatrix v0 = gf2_matmul(h, a.transposed());

    std::vector<BitVector> pivot_row(h.cols);
    std::vector<bool> claimed(h.cols, false);
    for (std::size_t r = 0; r < v0.rows; ++r) {
        BitVector row = v0.row(r);
        for (;;) {
            int lc = last_nonzero(row);
            if (lc < 0) throw std::invalid_argument("normalize_constraints: dependent rows");
            if (!claimed[static_cast<std::size_t>(lc)]) {
                claimed[static_cast<std::size_t>(lc)] = true;
                pivot_row[static_cast<std::size_t>(lc)] = row;
                break;
            }
            const BitVector& p = pivot_row[static_cast<std::size_t>(lc)];
            for (std::size_t j = 0; j < row.size(); ++j) row[j] ^= p[j];
        }
    }

    BitMatrix v(h.rows, h.cols);
    ConstraintSet cs;
    std::size_t out = 0;
    for (std::size_t c = 0; c < h.cols; ++c) {
        if (!claimed[c]) continue;
        v.set_row(out++, pivot_row[c]);
        cs.frozen_set.push_back(c);
        std::vector<std::size_t> deps;
        for (std::size_t j = 0; j < c; ++j)
            if (pivot_row[c][j]) deps.push_back(j);
        cs.constraints[c] = std::move(deps);
    }
    return {v, cs};
}

// Fixture text format: one row per line, characters '0'/'1', no separators.
inline std::string matrix_to_text(const BitMatrix& m) {
    std::string s;
    s.reserve(m.rows * (m.cols + 1));
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) s += m.at(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

inline BitMatrix matrix_from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty()) lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty()) throw std::invalid_argument("matrix_from_text: empty input");
    BitMatrix m(lines.size(), lines[0].size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != m.cols) throw std::invalid_argument("matrix_from_text: ragged rows");
        for (std::size_t c = 0; c < m.cols; ++c) {
            char ch = lines[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("matrix_from_text: bad character");
            m.at(r, c) = static_cast<std::uint8_t>(ch - '0');
        }
    }
    return m;
}

}  // namespace golay24
