#include "qoc/qoc.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qoc;

namespace {

PolyF2 gen(const Space& s, const std::string& name) {
    return PolyF2::generator(s, s.index_of(name));
}

}  // namespace

TEST_CASE("generator action of the Steenrod square") {
    Space s = Space::bslnc(4);
    CHECK(sq2(gen(s, "c2"), Twist::O) == gen(s, "c3"));
    CHECK(sq2(PolyF2::one(s), Twist::O).is_zero());
    CHECK(sq2(PolyF2::one(s), Twist::T) == gen(s, "th"));
    CHECK(sq2(gen(s, "th"), Twist::T).is_zero());
    CHECK(sq2(gen(s, "th") * gen(s, "c2"), Twist::O) ==
          gen(s, "th") * gen(s, "th") * gen(s, "c2") + gen(s, "th") * gen(s, "c3"));
    // odd and top classes die
    CHECK(sq2(gen(s, "c3"), Twist::O).is_zero());
    CHECK(sq2(gen(s, "c4"), Twist::O).is_zero());
}

TEST_CASE("BGL_n square") {
    Space g = Space::bgln(4);
    CHECK(sq2_bgln(gen(g, "c2")) == gen(g, "c1") * gen(g, "c2") + gen(g, "c3"));
    CHECK(sq2_bgln(gen(g, "c3")) == gen(g, "c1") * gen(g, "c3"));
    CHECK(sq2_bgln(gen(g, "c1")) == gen(g, "c1") * gen(g, "c1"));
}

TEST_CASE("sq2 matrices in the fixed bases") {
    Space s = Space::bslnc(4);
    Sq2Matrix m = sq2_matrix(s, 2, Twist::O);
    REQUIRE(m.dom.size() == 2);  // {th^2, c2}
    REQUIRE(m.cod.size() == 3);  // {th^3, th*c2, c3}
    CHECK_FALSE(m.mat.get(0, 0));
    CHECK_FALSE(m.mat.get(1, 0));
    CHECK_FALSE(m.mat.get(2, 0));
    CHECK_FALSE(m.mat.get(0, 1));
    CHECK_FALSE(m.mat.get(1, 1));
    CHECK(m.mat.get(2, 1));
    CHECK(rank(m.mat) == 1);
    CHECK(sq2_rank(s, 2, Twist::T) == 2);
    CHECK(sq2_rank(s, 0, Twist::O) == 0);
}

TEST_CASE("kernels of the square") {
    Space s = Space::bslnc(4);
    PolyF2 th = gen(s, "th");

    auto k2 = ker_sq2(s, 2, Twist::O);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == th * th);

    auto k3 = ker_sq2(s, 3, Twist::O);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == gen(s, "c3"));

    CHECK(ker_sq2(s, 0, Twist::T).empty());
}

TEST_CASE("integral kernel lattices in Hermite form") {
    Space s = Space::bslnc(4);
    IMat l = ker_partial_lattice(s, 2, Twist::O);
    REQUIRE(l.rows == 2);
    CHECK(l.at(0, 0) == 1);
    CHECK(l.at(0, 1) == 0);
    CHECK(l.at(1, 0) == 0);
    CHECK(l.at(1, 1) == 2);  // Z<th^2, 2 c2>

    IMat l0t = ker_partial_lattice(s, 0, Twist::T);
    REQUIRE(l0t.rows == 1);
    CHECK(l0t.at(0, 0) == 2);  // Z<2> in CH^0

    IMat l0o = ker_partial_lattice(s, 0, Twist::O);
    REQUIRE(l0o.rows == 1);
    CHECK(l0o.at(0, 0) == 1);  // Z<1>
}

TEST_CASE("kernel subring and submodule descriptions") {
    CHECK(kernel_subring_check(4, 8, Twist::O).ok);
    CHECK(kernel_subring_check(5, 8, Twist::T).ok);
    CHECK(kernel_subring_check(2, 4, Twist::O).ok);
}

TEST_CASE("steenrod framework properties on a small range") {
    SuiteParams prm;
    prm.n = 4;
    prm.qmax = 8;
    CHECK(suites::sq2_nilpotent_suite(prm).ok);
    CHECK(suites::sq2_derivation_suite(prm).ok);
    CHECK(suites::sq2_twist_suite(prm).ok);
    CHECK(suites::sq2_naturality_suite(prm).ok);
    CHECK(suites::rank_nullity_suite(prm).ok);
}

TEST_CASE("twists add modulo two") {
    CHECK(Twist::O + Twist::O == Twist::O);
    CHECK(Twist::O + Twist::T == Twist::T);
    CHECK(Twist::T + Twist::T == Twist::O);
}
