#pragma once

// Exact integer matrices with Hermite and Smith normal forms. Entries are
// arbitrary-precision so intermediate growth is harmless at the scales we
// work with (a few hundred rows at most).

#include "witt.hpp"

#include <optional>
#include <vector>

namespace qoc {

struct IMat {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const IMat&) const = default;
};

// Row-style Hermite normal form of the lattice spanned by the rows: row
// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result is a canonical lattice basis.
inline IMat hnf_rows(IMat m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        // Clear column c below row r by gcd steps.
        while (true) {
            size_t best = m.rows;
            for (size_t i = r; i < m.rows; ++i)
                if (m.at(i, c) != 0 &&
                    (best == m.rows || abs(m.at(i, c)) < abs(m.at(best, c))))
                    best = i;
            if (best == m.rows) break;  // column clear
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(best, j), m.at(r, j));
            bool done = true;
            for (size_t i = r + 1; i < m.rows; ++i) {
                if (m.at(i, c) == 0) continue;
                Int q = m.at(i, c) / m.at(r, c);
                for (size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
                if (m.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(r, c) == 0) continue;
        if (m.at(r, c) < 0)
            for (size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q = m.at(i, c) / m.at(r, c);
            if (m.at(i, c) - q * m.at(r, c) < 0) q -= 1;
            if (q != 0)
                for (size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
        }
        ++r;
    }
    IMat out(r, m.cols);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

// Nonzero invariant factors d1 | d2 | ... of the matrix.
inline std::vector<Int> snf_invariants(IMat m) {
    std::vector<Int> inv;
    size_t t = 0;
    while (true) {
        // Smallest nonzero entry of the trailing submatrix.
        size_t bi = m.rows, bj = m.cols;
        for (size_t i = t; i < m.rows; ++i)
            for (size_t j = t; j < m.cols; ++j)
                if (m.at(i, j) != 0 &&
                    (bi == m.rows || abs(m.at(i, j)) < abs(m.at(bi, bj))))
                    bi = i, bj = j;
        if (bi == m.rows) break;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(bi, j), m.at(t, j));
        for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, bj), m.at(i, t));

        bool clean = true;
        for (size_t i = t + 1; i < m.rows; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q = m.at(i, t) / m.at(t, t);
            for (size_t j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) clean = false;
        }
        for (size_t j = t + 1; j < m.cols; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q = m.at(t, j) / m.at(t, t);
            for (size_t i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // pivot shrank; repeat with the same t

        // Enforce divisibility of the pivot into the remaining entries.
        bool fixed = false;
        for (size_t i = t + 1; i < m.rows && !fixed; ++i)
            for (size_t j = t + 1; j < m.cols && !fixed; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (size_t jj = t; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
                    fixed = true;
                }
        if (fixed) continue;

        inv.push_back(abs(m.at(t, t)));
        ++t;
        if (t == m.rows || t == m.cols) break;
    }
    return inv;
}

// Solves x * B = r over Z where B is a row-HNF basis. Returns nullopt when r
// is not in the row lattice.
inline std::optional<std::vector<Int>> solve_in_hnf_basis(const IMat& B,
                                                          std::vector<Int> r) {
    if (r.size() != B.cols) throw input_error("dimension mismatch");
    std::vector<Int> x(B.rows, 0);
    for (size_t i = 0; i < B.rows; ++i) {
        size_t p = 0;
        while (p < B.cols && B.at(i, p) == 0) ++p;
        if (p == B.cols) throw internal_error("zero row in HNF basis");
        // Entries left of p are already zero in r if solvable so far.
        if (r[p] % B.at(i, p) != 0) return std::nullopt;
        Int q = r[p] / B.at(i, p);
        if (q != 0)
            for (size_t j = p; j < B.cols; ++j) r[j] -= q * B.at(i, j);
        x[i] = q;
    }
    for (const Int& v : r)
        if (v != 0) return std::nullopt;
    return x;
}

}  // namespace qoc
