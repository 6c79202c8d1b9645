#pragma once

// Bit-packed linear algebra over F2: rank, reduced row echelon form, kernel
// and image bases, and linear solves. Kernel/image bases are returned in a
// canonical reduced form so golden tests are reproducible.

#include "witt.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qoc {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v = true) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    BitVec& operator^=(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    bool is_zero() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    int first_set() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) {
                int bit = static_cast<int>(i * 64) + __builtin_ctzll(w_[i]);
                return bit < static_cast<int>(n_) ? bit : -1;
            }
        return -1;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }

    bool operator==(const BitVec&) const = default;

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

class BitMat {
public:
    BitMat() = default;
    BitMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BitVec& row(size_t i) { return r_[i]; }
    const BitVec& row(size_t i) const { return r_[i]; }
    bool get(size_t i, size_t j) const { return r_[i].get(j); }
    void set(size_t i, size_t j, bool v = true) { r_[i].set(j, v); }

    BitMat transposed() const {
        BitMat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i);
        return t;
    }

    bool operator==(const BitMat&) const = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

// In-place reduced row echelon form; returns the pivot column indices.
inline std::vector<size_t> rref(BitMat& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        std::swap(m.row(p), m.row(r));
        for (size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(BitMat m) { return rref(m).size(); }

// Canonical basis of {x : Mx = 0}; vectors have length cols. The basis vector
// attached to free column f has x_f = 1 and zero at all other free columns.
inline std::vector<BitVec> kernel_basis(BitMat m) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<BitVec> out;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.cols());
        v.set(f);
        for (size_t r = 0; r < pivots.size(); ++r)
            if (m.get(r, f)) v.set(pivots[r]);
        out.push_back(v);
    }
    return out;
}

// Canonical (RREF) basis of the row space.
inline std::vector<BitVec> row_space_basis(BitMat m) {
    size_t rk = rref(m).size();
    std::vector<BitVec> out;
    for (size_t i = 0; i < rk; ++i) out.push_back(m.row(i));
    return out;
}

// Canonical basis of the column space; vectors have length rows.
inline std::vector<BitVec> image_basis(const BitMat& m) { return row_space_basis(m.transposed()); }

// One solution x of Mx = b (free variables zero), or nullopt.
inline std::optional<BitVec> solve(const BitMat& m, const BitVec& b) {
    BitMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        aug.row(i) = BitVec(m.cols() + 1);
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) aug.set(i, j);
        if (b.get(i)) aug.set(i, m.cols());
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    BitVec x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        if (aug.get(r, m.cols())) x.set(pivots[r]);
    return x;
}

// RREF of a list of row vectors (span canonicalization).
inline std::vector<BitVec> canonical_span(const std::vector<BitVec>& rows, size_t width) {
    BitMat m(rows.size(), width);
    for (size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i];
    return row_space_basis(std::move(m));
}

}  // namespace qoc
