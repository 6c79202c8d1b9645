#include "qoc/qoc.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qoc;

namespace {

BitMat random_bitmat(std::mt19937_64& rng, size_t rows, size_t cols) {
    BitMat m(rows, cols);
    std::bernoulli_distribution coin(0.4);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (coin(rng)) m.set(i, j);
    return m;
}

BitVec apply(const BitMat& m, const BitVec& x) {
    BitVec out(m.rows());
    for (size_t j = 0; j < m.cols(); ++j)
        if (x.get(j)) {
            for (size_t i = 0; i < m.rows(); ++i)
                if (m.get(i, j)) out.set(i, !out.get(i));
        }
    return out;
}

// Brute-force kernel dimension by enumerating all vectors (cols <= 12).
size_t brute_kernel_size(const BitMat& m) {
    size_t count = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m.cols()); ++mask) {
        BitVec x(m.cols());
        for (size_t j = 0; j < m.cols(); ++j)
            if (mask & (uint64_t(1) << j)) x.set(j);
        if (apply(m, x).is_zero()) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("kernel basis against brute-force enumeration") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        BitMat m = random_bitmat(rng, 5, 8);
        std::vector<BitVec> ker = kernel_basis(m);
        for (const BitVec& v : ker) CHECK(apply(m, v).is_zero());
        CHECK(ker.size() + rank(m) == m.cols());
        CHECK((uint64_t(1) << ker.size()) == brute_kernel_size(m));
    }
}

TEST_CASE("f2 solve finds solutions exactly when consistent") {
    std::mt19937_64 rng(4);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 60; ++trial) {
        BitMat m = random_bitmat(rng, 7, 6);
        BitVec x(6);
        for (size_t j = 0; j < 6; ++j)
            if (coin(rng)) x.set(j);
        BitVec b = apply(m, x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(apply(m, *sol) == b);
    }
    // An inconsistent system.
    BitMat z(2, 2);
    BitVec b(2);
    b.set(0);
    CHECK_FALSE(solve(z, b).has_value());
}

TEST_CASE("image basis spans the columns") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        BitMat m = random_bitmat(rng, 6, 9);
        std::vector<BitVec> img = image_basis(m);
        CHECK(img.size() == rank(m));
        for (size_t j = 0; j < m.cols(); ++j) {
            BitVec col(m.rows());
            for (size_t i = 0; i < m.rows(); ++i)
                if (m.get(i, j)) col.set(i);
            for (const BitVec& row : img) {
                int lead = row.first_set();
                if (lead >= 0 && col.get(static_cast<size_t>(lead))) col ^= row;
            }
            CHECK(col.is_zero());
        }
    }
}

TEST_CASE("hermite normal form of small lattices") {
    IMat m(2, 2);
    m.at(0, 0) = 2, m.at(0, 1) = 4;
    m.at(1, 0) = 6, m.at(1, 1) = 8;
    IMat h = hnf_rows(std::move(m));
    REQUIRE(h.rows == 2);
    CHECK(h.at(0, 0) == 2);
    CHECK(h.at(0, 1) == 0);
    CHECK(h.at(1, 0) == 0);
    CHECK(h.at(1, 1) == 4);
}

TEST_CASE("hnf is a canonical basis of the row lattice") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        IMat m(4, 3);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 3; ++j) m.at(i, j) = d(rng);
        IMat h = hnf_rows(m);
        // every original row solves in the basis
        for (size_t i = 0; i < 4; ++i) {
            std::vector<Int> r(3);
            for (size_t j = 0; j < 3; ++j) r[j] = m.at(i, j);
            CHECK(solve_in_hnf_basis(h, r).has_value());
        }
        // random integer combinations of basis rows solve as well
        for (int k = 0; k < 5; ++k) {
            std::vector<Int> r(3, 0);
            for (size_t i = 0; i < h.rows; ++i) {
                Int c = d(rng);
                for (size_t j = 0; j < 3; ++j) r[j] += c * h.at(i, j);
            }
            CHECK(solve_in_hnf_basis(h, r).has_value());
        }
    }
}

TEST_CASE("smith normal form invariants") {
    IMat m(2, 2);
    m.at(0, 0) = 2, m.at(0, 1) = 4;
    m.at(1, 0) = 6, m.at(1, 1) = 8;
    std::vector<Int> inv = snf_invariants(std::move(m));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 4);

    // The 2x1 localization matrix (1, -2)^T has a single invariant factor 1.
    IMat loc(2, 1);
    loc.at(0, 0) = 1;
    loc.at(1, 0) = -2;
    std::vector<Int> inv2 = snf_invariants(std::move(loc));
    REQUIRE(inv2.size() == 1);
    CHECK(inv2[0] == 1);
}

TEST_CASE("snf divisibility chain and determinant product") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        IMat m(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m.at(i, j) = d(rng);
        Int det = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                  m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                  m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        std::vector<Int> inv = snf_invariants(m);
        for (size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
        if (det != 0) {
            REQUIRE(inv.size() == 3);
            CHECK(inv[0] * inv[1] * inv[2] == abs(det));
        } else {
            CHECK(inv.size() < 3);
        }
    }
}
